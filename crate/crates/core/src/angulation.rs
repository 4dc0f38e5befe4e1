//! The operations shared by disk and annulus angulations.

use std::fmt;

use crate::annulus::{AnnulusAngulation, ArcClass};
use crate::disk::{Diagonal, DiskAngulation};
use crate::quiver::ColoredQuiver;
use crate::Error;

pub trait Angulation: Clone + PartialEq + fmt::Display {
    type Arc: Copy + PartialEq + fmt::Display;

    fn m(&self) -> u32;

    /// Arcs in canonical order; arc `i` is quiver vertex `i`.
    fn arcs(&self) -> &[Self::Arc];

    /// The m+1 completing arcs in clockwise cycle order, ending with `arc`.
    fn completions(&self, arc: &Self::Arc) -> Result<Vec<Self::Arc>, Error>;

    fn flip(&self, arc: &Self::Arc) -> Result<Self, Error>;

    fn quiver(&self) -> ColoredQuiver;

    fn quiver_ordered(&self, order: &[Self::Arc]) -> Result<ColoredQuiver, Error>;

    /// A representative used between random-walk steps.
    fn normalized(&self) -> Self {
        self.clone()
    }
}

impl Angulation for DiskAngulation {
    type Arc = Diagonal;

    fn m(&self) -> u32 {
        self.config().m()
    }

    fn arcs(&self) -> &[Diagonal] {
        self.diagonals()
    }

    fn completions(&self, arc: &Diagonal) -> Result<Vec<Diagonal>, Error> {
        Ok(DiskAngulation::completions(self, *arc)?)
    }

    fn flip(&self, arc: &Diagonal) -> Result<Self, Error> {
        Ok(DiskAngulation::flip(self, *arc)?)
    }

    fn quiver(&self) -> ColoredQuiver {
        DiskAngulation::quiver(self)
    }

    fn quiver_ordered(&self, order: &[Diagonal]) -> Result<ColoredQuiver, Error> {
        Ok(DiskAngulation::quiver_ordered(self, order)?)
    }
}

impl Angulation for AnnulusAngulation {
    type Arc = ArcClass;

    fn m(&self) -> u32 {
        self.config().m()
    }

    fn arcs(&self) -> &[ArcClass] {
        AnnulusAngulation::arcs(self)
    }

    fn completions(&self, arc: &ArcClass) -> Result<Vec<ArcClass>, Error> {
        Ok(AnnulusAngulation::completions(self, arc)?)
    }

    fn flip(&self, arc: &ArcClass) -> Result<Self, Error> {
        Ok(AnnulusAngulation::flip(self, arc)?)
    }

    fn quiver(&self) -> ColoredQuiver {
        AnnulusAngulation::quiver(self)
    }

    fn quiver_ordered(&self, order: &[ArcClass]) -> Result<ColoredQuiver, Error> {
        Ok(AnnulusAngulation::quiver_ordered(self, order)?)
    }

    fn normalized(&self) -> Self {
        self.canonical()
    }
}
