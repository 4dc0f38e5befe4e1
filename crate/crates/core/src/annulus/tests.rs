use super::*;

fn cfg(m: u32, p: u32, q: u32) -> AnnulusConfig {
    AnnulusConfig::new(m, p, q).unwrap()
}

fn b(o: u32, i: u32, w: i64) -> ArcClass {
    ArcClass::bridge(o, i, w)
}

fn walk(start: &AnnulusAngulation, steps: usize, mut seed: u64) -> Vec<AnnulusAngulation> {
    let mut out = vec![start.clone()];
    let mut cur = start.clone();
    for _ in 0..steps {
        seed = seed
            .wrapping_mul(6364136223846793005)
            .wrapping_add(1442695040888963407);
        let arc = cur.arcs()[(seed >> 33) as usize % cur.len()];
        cur = cur.flip(&arc).unwrap().canonical();
        out.push(cur.clone());
    }
    out
}

#[test]
fn m_diagonal_examples() {
    let c = cfg(2, 4, 3);
    assert!(c.is_m_diagonal(&b(1, 1, 0)).unwrap());
    assert!(c.is_m_diagonal(&ArcClass::outer_chord(1, 3)).unwrap());
    assert!(!c.is_m_diagonal(&ArcClass::outer_chord(1, 2)).unwrap());
    assert!(!c.is_m_diagonal(&ArcClass::outer_chord(1, 9)).unwrap());
    assert!(cfg(1, 2, 1)
        .is_m_diagonal(&ArcClass::outer_chord(1, 2))
        .unwrap());
    assert!(!cfg(1, 2, 1)
        .is_m_diagonal(&ArcClass::outer_chord(1, 3))
        .unwrap());
    assert!(!c.is_m_diagonal(&ArcClass::inner_chord(1, 7)).unwrap());
    assert!(c.is_m_diagonal(&ArcClass::inner_chord(1, 5)).unwrap());
    assert!(!c.is_m_diagonal(&b(1, 2, 0)).unwrap());
    assert_eq!(
        c.is_m_diagonal(&b(9, 1, 0)),
        Err(AnnulusError::IndexOutOfRange(b(9, 1, 0)))
    );
    assert!(cfg(1, 2, 3).is_m_diagonal(&b(2, 1, -4)).unwrap());
}

#[test]
fn crossing_examples() {
    let c = cfg(2, 4, 3);
    assert!(!c.crosses(&b(1, 1, 0), &b(3, 3, 0)));
    for w in -3..=3 {
        assert!(c.crosses(&ArcClass::outer_chord(1, 3), &b(2, 1, w)));
        assert!(c.crosses(&b(2, 1, w), &ArcClass::outer_chord(1, 3)));
    }
    assert!(!c.crosses(&ArcClass::outer_chord(1, 3), &ArcClass::inner_chord(1, 3)));
    assert!(c.crosses(&ArcClass::outer_chord(1, 3), &ArcClass::outer_chord(2, 3)));
    assert!(c.crosses(&ArcClass::outer_chord(1, 3), &ArcClass::outer_chord(3, 3)));
    assert!(!c.crosses(&ArcClass::outer_chord(1, 3), &ArcClass::outer_chord(4, 3)));
    assert!(!c.crosses(&ArcClass::outer_chord(1, 5), &ArcClass::outer_chord(2, 3)));
    assert!(c.crosses(&ArcClass::outer_chord(7, 3), &ArcClass::outer_chord(1, 3)));
    assert!(!c.crosses(&b(1, 1, 0), &b(1, 1, 0)));

    let k = cfg(1, 1, 1);
    assert!(!k.crosses(&b(1, 1, 0), &b(1, 1, 1)));
    assert!(k.crosses(&b(1, 1, 0), &b(1, 1, 2)));
    let two = cfg(1, 2, 2);
    assert!(two.crosses(&b(1, 2, 0), &b(2, 1, 0)));
    assert!(!two.crosses(&b(1, 1, 0), &b(2, 2, 0)));
}

#[test]
fn initial_bridges_examples() {
    let k = cfg(1, 1, 1).initial_bridges();
    assert_eq!(k.arcs(), &[b(1, 1, 0), b(1, 1, 1)]);
    let big = cfg(2, 4, 3).initial_bridges();
    assert_eq!(big.len(), 7);
    assert!(big.arcs().iter().all(ArcClass::is_bridge));
    for (m, p, q) in [(1, 1, 1), (1, 3, 2), (2, 4, 3), (3, 2, 2), (2, 1, 5)] {
        let c = cfg(m, p, q);
        let init = c.initial_bridges();
        assert_eq!(
            AnnulusAngulation::new(c, init.arcs().to_vec()).unwrap(),
            init
        );
        let faces = init.faces();
        assert_eq!(faces.len(), c.rank());
        assert!(faces.iter().all(|f| f.len() == m as usize + 2));
    }
}

#[test]
fn validation_errors() {
    let c = cfg(1, 1, 1);
    assert_eq!(
        AnnulusAngulation::new(c, vec![b(1, 1, 0), b(1, 1, 2)]),
        Err(AnnulusError::Crossing(b(1, 1, 0), b(1, 1, 2)))
    );
    assert_eq!(
        AnnulusAngulation::new(c, vec![b(1, 1, 0)]),
        Err(AnnulusError::WrongCardinality {
            expected: 2,
            found: 1
        })
    );
    assert_eq!(
        AnnulusAngulation::new(c, vec![b(1, 1, 0), b(1, 1, 0)]),
        Err(AnnulusError::Duplicate(b(1, 1, 0)))
    );
    let c = cfg(1, 3, 1);
    assert_eq!(
        AnnulusAngulation::new(
            c,
            vec![
                ArcClass::outer_chord(1, 2),
                ArcClass::outer_chord(2, 2),
                ArcClass::outer_chord(3, 2),
                ArcClass::outer_chord(1, 1)
            ]
        ),
        Err(AnnulusError::NotMDiagonal(ArcClass::outer_chord(1, 1)))
    );
}

#[test]
fn kronecker_flip_and_quiver() {
    let k = cfg(1, 1, 1).initial_bridges();
    let f = k.flip(&b(1, 1, 0)).unwrap();
    assert_eq!(f.arcs(), &[b(1, 1, 1), b(1, 1, 2)]);
    assert_eq!(
        k.completions(&b(1, 1, 0)).unwrap(),
        vec![b(1, 1, 2), b(1, 1, 0)]
    );
    assert_eq!(
        f.flip(&b(1, 1, 1)).unwrap().arcs(),
        &[b(1, 1, 2), b(1, 1, 3)]
    );

    let q = k.quiver();
    assert!(q.is_valid());
    assert_eq!(q.mult(0, 1, 0) + q.mult(1, 0, 0), 2);
    assert_eq!(q.mult(0, 1, 0) * q.mult(1, 0, 0), 0);
    let (s, t) = if q.mult(0, 1, 0) == 2 { (0, 1) } else { (1, 0) };
    assert_eq!(q.mult(t, s, 1), 2);
    assert_eq!(q.mult(s, t, 1), 0);
}

#[test]
fn initial_quiver_is_a_cycle() {
    let q = cfg(2, 4, 3).initial_bridges().quiver();
    assert!(q.is_valid());
    let g = q.gabriel();
    assert_eq!(g.arrow_count(), 7);
    for v in 0..7 {
        let deg = q.arrows().filter(|a| a.0 == v).map(|a| a.3).sum::<u64>();
        assert_eq!(deg, 2);
    }
}

#[test]
fn flip_cycles_have_length_m_plus_one() {
    for (m, p, q) in [(1, 2, 1), (2, 2, 2), (3, 2, 1), (2, 4, 3)] {
        let c = cfg(m, p, q);
        for d in walk(&c.initial_bridges(), 20, u64::from(m * 31 + p * 7 + q)) {
            for i in 0..d.len() {
                let mut cur = d.clone();
                let mut arc = d.arcs()[i];
                for _ in 0..=m {
                    let next = cur.flip(&arc).unwrap();
                    arc = *next.arcs().iter().find(|a| !cur.contains(a)).unwrap();
                    cur = next;
                }
                assert_eq!(cur, d);
            }
        }
    }
}

#[test]
fn flips_match_mutation_along_walks() {
    for (m, p, q) in [
        (1, 1, 1),
        (1, 2, 1),
        (1, 2, 2),
        (2, 2, 1),
        (2, 4, 3),
        (3, 2, 2),
    ] {
        let c = cfg(m, p, q);
        for d in walk(&c.initial_bridges(), 40, u64::from(m + 10 * p + 100 * q)) {
            assert_eq!(
                AnnulusAngulation::new(c, d.arcs().to_vec()).as_ref(),
                Ok(&d)
            );
            for (k, arc) in d.arcs().iter().enumerate() {
                let flipped = d.flip(arc).unwrap();
                let new = *flipped.arcs().iter().find(|a| !d.contains(a)).unwrap();
                let mut order = d.arcs().to_vec();
                order[k] = new;
                let got = flipped.quiver_ordered(&order).unwrap();
                assert_eq!(got, d.quiver().mutate(k).unwrap(), "{d} at {arc}");
            }
        }
    }
}

#[test]
fn faces_agree_across_bridges() {
    for (m, p, q) in [(1, 2, 2), (2, 4, 3), (3, 1, 2)] {
        let c = cfg(m, p, q);
        for d in walk(&c.initial_bridges(), 30, 5) {
            let canon = |bridge: ArcClass| {
                let mut v: Vec<_> = d
                    .faces_via(bridge)
                    .unwrap()
                    .iter()
                    .map(|f| f.canonical_sides())
                    .collect();
                v.sort();
                v
            };
            let bridges: Vec<_> = d.bridges().copied().collect();
            assert!(bridges.len() >= 2);
            let first = canon(bridges[0]);
            for &x in &bridges[1..] {
                assert_eq!(canon(x), first);
            }
        }
    }
}

#[test]
fn canonical_rebases_windings() {
    let d = AnnulusAngulation::new(cfg(1, 1, 1), vec![b(1, 1, 5), b(1, 1, 6)]).unwrap();
    assert_eq!(d.canonical(), cfg(1, 1, 1).initial_bridges());
    assert_eq!(d.quiver(), d.canonical().quiver());
}

#[test]
fn ears() {
    let c = cfg(2, 4, 3);
    assert!(c.is_m_ear(&ArcClass::outer_chord(1, 3)));
    assert!(c.is_m_ear(&ArcClass::inner_chord(2, 3)));
    assert!(!c.is_m_ear(&b(1, 1, 0)));
    assert!(!c.is_m_ear(&ArcClass::outer_chord(1, 5)));
}

#[test]
fn bridge_cut_examples() {
    let c = cfg(2, 4, 3);
    let AnnulusCut::Bridge(cut) = c.cut_along(b(1, 1, 0)).unwrap() else {
        panic!("bridge cut expected")
    };
    assert_eq!(cut.disk().sides(), 16);
    let init = c.initial_bridges();
    let disk = cut.split(&init).unwrap();
    assert_eq!(disk.len(), 6);
    for &d in disk.diagonals() {
        assert_eq!(cut.transport(&cut.lift(d)), Some(d));
    }
}

#[test]
fn chord_cut_examples() {
    let c = cfg(2, 4, 3);
    let AnnulusCut::Chord(cut) = c.cut_along(ArcClass::outer_chord(1, 3)).unwrap() else {
        panic!("chord cut expected")
    };
    assert_eq!(cut.reduced(), cfg(2, 3, 3));
    assert_eq!(cut.reduced().outer_len(), 6);
    assert_eq!(cut.disk().sides(), 4);
    assert_eq!(cut.transport(&b(2, 2, 0)), None);
    assert_eq!(cut.transport(&ArcClass::outer_chord(1, 3)), None);
    let inner = ArcClass::inner_chord(1, 3);
    assert_eq!(cut.transport(&inner), Some(Transported::Annulus(inner)));
    let enclosing = ArcClass::outer_chord(1, 5);
    let t = cut.transport(&enclosing).unwrap();
    assert_eq!(t, Transported::Annulus(ArcClass::outer_chord(1, 3)));
    assert_eq!(cut.lift(t), enclosing);
    for w in -2..=2 {
        let x = b(5, 1, w);
        let t = cut.transport(&x).unwrap();
        assert_eq!(cut.lift(t), x);
        let Transported::Annulus(y) = t else { panic!() };
        assert!(cut.reduced().is_m_diagonal(&y).unwrap());
    }
}

#[test]
fn chord_cut_split_and_flip_commute() {
    for (m, p, q) in [(1, 3, 2), (2, 4, 3), (1, 2, 3)] {
        let c = cfg(m, p, q);
        let mut seen = 0;
        for d in walk(&c.initial_bridges(), 60, 17) {
            let chords: Vec<_> = d
                .arcs()
                .iter()
                .filter(|a| !a.is_bridge())
                .copied()
                .collect();
            for x in chords {
                let AnnulusCut::Chord(cut) = c.cut_along(x).unwrap() else {
                    panic!()
                };
                let (small, disk) = cut.split(&d).unwrap();
                assert_eq!(small.len() + disk.len() + 1, d.len());
                for y in d.arcs().iter().filter(|a| **a != x) {
                    let flipped = d.flip(y).unwrap();
                    let (fs, fd) = cut.split(&flipped).unwrap();
                    match cut.transport(y).unwrap() {
                        Transported::Annulus(t) => {
                            assert_eq!(fs, small.flip(&t).unwrap());
                            assert_eq!(fd, disk);
                        }
                        Transported::Disk(t) => {
                            assert_eq!(fd, disk.flip(t).unwrap());
                            assert_eq!(fs, small);
                        }
                    }
                    seen += 1;
                }
            }
        }
        assert!(seen > 0, "no chords met for {m} {p} {q}");
    }
}
