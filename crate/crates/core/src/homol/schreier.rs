use std::collections::VecDeque;

use super::{inverse_word, FpGroup, Letter, Word};
use crate::error::{Error, Result};
use crate::group::FinGroup;

/// Coset table, spanning tree and Schreier generators of `ker phi`.
pub struct SchreierData<'g> {
    pub(crate) fp: FpGroup,
    pub(crate) group: &'g FinGroup,
    pub(crate) images: Vec<usize>,
    /// `forward[s][u] = u * phi(s)`.
    pub(crate) forward: Vec<Vec<u32>>,
    /// `backward[s][u] = u * phi(s)^-1`.
    pub(crate) backward: Vec<Vec<u32>>,
    /// Tree edge into each coset: parent coset and the letter read from it.
    parent: Vec<Option<(usize, Letter)>>,
    /// Schreier generator index of edge `(u, s)` at `u * rank + s`, if not a
    /// tree edge.
    edge_index: Vec<Option<u32>>,
    edges: Vec<(usize, usize)>,
}

/// Builds Schreier data for `gen_i -> images[i]`.
///
/// Fails if the images do not generate `g` or violate a relator.
pub fn schreier_data<'g>(fp: &FpGroup, group: &'g FinGroup, images: &[usize]) -> Result<SchreierData<'g>> {
    if images.len() != fp.rank() {
        return Err(Error::InvalidParameters(format!("{} images for {} generators", images.len(), fp.rank())));
    }
    for &i in images {
        group.check_element(i)?;
    }
    if !group.generates(images) {
        return Err(Error::NotGenerating(format!("images in {}", group.name())));
    }
    let n = group.order();
    let k = fp.rank();
    let forward: Vec<Vec<u32>> = images.iter().map(|&g| group.right_mult_map(g)).collect();
    let backward: Vec<Vec<u32>> = images.iter().map(|&g| group.right_mult_map(group.inv(g))).collect();

    let mut sd = SchreierData {
        fp: fp.clone(),
        group,
        images: images.to_vec(),
        forward,
        backward,
        parent: vec![None; n],
        edge_index: Vec::new(),
        edges: Vec::new(),
    };
    for r in &fp.relators {
        if sd.step_word(0, r) != 0 {
            return Err(Error::InvalidParameters("images do not satisfy the relators".into()));
        }
    }

    // BFS tree with letter order x, x^-1, y, y^-1, ..
    let mut tree_edge = vec![false; n * k];
    let mut seen = vec![false; n];
    seen[0] = true;
    let mut queue = VecDeque::from([0usize]);
    while let Some(u) = queue.pop_front() {
        for s in 0..k {
            for inverse in [false, true] {
                let letter = Letter { gen: s, inverse };
                let v = sd.step(u, letter);
                if !seen[v] {
                    seen[v] = true;
                    sd.parent[v] = Some((u, letter));
                    let edge = if inverse { (v, s) } else { (u, s) };
                    tree_edge[edge.0 * k + edge.1] = true;
                    queue.push_back(v);
                }
            }
        }
    }
    sd.edge_index = vec![None; n * k];
    for u in 0..n {
        for s in 0..k {
            if !tree_edge[u * k + s] {
                sd.edge_index[u * k + s] = Some(sd.edges.len() as u32);
                sd.edges.push((u, s));
            }
        }
    }
    Ok(sd)
}

impl<'g> SchreierData<'g> {
    pub fn group(&self) -> &'g FinGroup {
        self.group
    }

    pub fn presentation(&self) -> &FpGroup {
        &self.fp
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn num_cosets(&self) -> usize {
        self.group.order()
    }

    pub fn num_schreier_generators(&self) -> usize {
        self.edges.len()
    }

    /// Coset and generator of each Schreier generator's edge.
    pub fn schreier_edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge_generator(&self, coset: usize, gen: usize) -> Option<usize> {
        self.edge_index[coset * self.fp.rank() + gen].map(|i| i as usize)
    }

    #[inline]
    pub(crate) fn step(&self, u: usize, l: Letter) -> usize {
        if l.inverse {
            self.backward[l.gen][u] as usize
        } else {
            self.forward[l.gen][u] as usize
        }
    }

    pub(crate) fn step_word(&self, u: usize, w: &[Letter]) -> usize {
        w.iter().fold(u, |c, &l| self.step(c, l))
    }

    /// Tree path from the identity coset to `coset`.
    pub fn tree_word(&self, coset: usize) -> Word {
        let mut w = Vec::new();
        let mut cur = coset;
        while let Some((p, l)) = self.parent[cur] {
            w.push(l);
            cur = p;
        }
        w.reverse();
        w
    }

    /// Walks `w` from coset `start`, returning the end coset and the signed
    /// count of traversed Schreier-generator edges.
    pub fn walk(&self, start: usize, w: &[Letter]) -> (usize, Vec<i64>) {
        let mut v = vec![0i64; self.edges.len()];
        let end = self.walk_into(start, w, &mut v);
        (end, v)
    }

    pub(crate) fn walk_into(&self, start: usize, w: &[Letter], acc: &mut [i64]) -> usize {
        let k = self.fp.rank();
        let mut u = start;
        for &l in w {
            if l.inverse {
                let v = self.backward[l.gen][u] as usize;
                if let Some(i) = self.edge_index[v * k + l.gen] {
                    acc[i as usize] -= 1;
                }
                u = v;
            } else {
                if let Some(i) = self.edge_index[u * k + l.gen] {
                    acc[i as usize] += 1;
                }
                u = self.forward[l.gen][u] as usize;
            }
        }
        u
    }

    /// Image in the abelianized free group on Schreier generators of a word
    /// lying in the kernel.
    pub fn rewrite(&self, w: &[Letter]) -> Result<Vec<i64>> {
        let (end, v) = self.walk(0, w);
        if end != 0 {
            return Err(Error::InvalidParameters("word is not in the kernel".into()));
        }
        Ok(v)
    }

    /// The Schreier generator `t(u) s t(u s)^-1` as a word.
    pub fn schreier_word(&self, index: usize) -> Word {
        let (u, s) = self.edges[index];
        let mut w = self.tree_word(u);
        w.push(Letter::new(s));
        w.extend(inverse_word(&self.tree_word(self.forward[s][u] as usize)));
        w
    }
}
