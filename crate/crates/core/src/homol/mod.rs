//! Reidemeister–Schreier machinery for finite quotients of finitely
//! presented groups.
//!
//! For an epimorphism `phi: P -> G` onto a finite group the coset space of
//! `N = ker phi` is `G` itself, so no coset enumeration is needed: the coset
//! table is right multiplication by the images of the generators. From a BFS
//! spanning tree of that Cayley graph we get Schreier generators of `N`, the
//! homology `H_1(N, F_l)` as a `G`-module, and from any invariant subspace
//! `U` the extension `P / K` where `K` is the preimage of `U`.

mod extension;
mod module;
mod schreier;

pub use extension::{extension_quotient, find_complement, klein_extension, Extension};
pub use module::{
    invariant_submodules, invariant_subspaces_exhaustive, is_invariant, kernel_mod_ell_homology, submodule_lattice,
    GModule, KernelHomology,
};
pub use schreier::{schreier_data, SchreierData};

use crate::dessin::TriangleType;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Letter {
    pub gen: usize,
    pub inverse: bool,
}

impl Letter {
    pub fn new(gen: usize) -> Letter {
        Letter { gen, inverse: false }
    }

    pub fn inv(self) -> Letter {
        Letter { gen: self.gen, inverse: !self.inverse }
    }
}

pub type Word = Vec<Letter>;

pub fn inverse_word(w: &[Letter]) -> Word {
    w.iter().rev().map(|l| l.inv()).collect()
}

#[derive(Clone, Debug)]
pub struct FpGroup {
    pub generators: Vec<String>,
    pub relators: Vec<Word>,
}

impl FpGroup {
    /// `<x, y | x^p, y^q, (x y)^r>`.
    pub fn triangle(ty: TriangleType) -> FpGroup {
        let x = Letter::new(0);
        let y = Letter::new(1);
        let power = |w: &[Letter], k: u32| -> Word { (0..k).flat_map(|_| w.iter().copied()).collect() };
        FpGroup {
            generators: vec!["x".into(), "y".into()],
            relators: vec![power(&[x], ty.p), power(&[y], ty.q), power(&[x, y], ty.r)],
        }
    }

    /// `<a, b | [a, b]^2>`: the orbifold group of a torus with one cone point
    /// of order two.
    pub fn punctured_torus_order_two() -> FpGroup {
        let (a, b) = (Letter::new(0), Letter::new(1));
        let comm = [a.inv(), b.inv(), a, b];
        FpGroup {
            generators: vec!["a".into(), "b".into()],
            relators: vec![comm.iter().chain(comm.iter()).copied().collect()],
        }
    }

    pub fn rank(&self) -> usize {
        self.generators.len()
    }
}
