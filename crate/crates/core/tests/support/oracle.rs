// Brute-force references for the automorphism-class tests. Shared with the
// acceptance suite through a `#[path]` include.

#![allow(dead_code)]

use std::collections::VecDeque;

use hurwitz::catalog::{self, GroupSpec};
use hurwitz::group::FinGroup;

/// Does `x1 -> x2, y1 -> y2` extend to an automorphism? Defines the map on
/// words in `x1, y1` and checks it is a well-defined bijective homomorphism
/// on all `|G|^2` products.
pub fn brute_force_automorphic(g: &FinGroup, (x1, y1): (usize, usize), (x2, y2): (usize, usize)) -> bool {
    let n = g.order();
    let mut phi = vec![usize::MAX; n];
    phi[0] = 0;
    let mut queue = VecDeque::from([0usize]);
    while let Some(u) = queue.pop_front() {
        for (s1, s2) in [(x1, x2), (y1, y2)] {
            let v = g.mul(u, s1);
            if phi[v] == usize::MAX {
                phi[v] = g.mul(phi[u], s2);
                queue.push_back(v);
            }
        }
    }
    if phi.contains(&usize::MAX) || phi[x1] != x2 || phi[y1] != y2 {
        return false;
    }
    let mut hit = vec![false; n];
    for &p in &phi {
        if std::mem::replace(&mut hit[p], true) {
            return false;
        }
    }
    (0..n).all(|a| (0..n).all(|b| phi[g.mul(a, b)] == g.mul(phi[a], phi[b])))
}

/// Simultaneous conjugacy of two pairs in the regular representation: some
/// point relabelling `sigma` with `sigma^-1 x1 sigma = x2` and the same for
/// `y`, tried from every base point.
pub fn regular_conjugate(g: &FinGroup, (x1, y1): (usize, usize), (x2, y2): (usize, usize)) -> bool {
    let n = g.order();
    let maps = [(g.right_mult_map(x1), g.right_mult_map(x2)), (g.right_mult_map(y1), g.right_mult_map(y2))];
    (0..n).any(|base| {
        let mut sigma = vec![u32::MAX; n];
        sigma[0] = base as u32;
        let mut queue = VecDeque::from([0usize]);
        while let Some(u) = queue.pop_front() {
            for (m1, m2) in &maps {
                let v = m1[u] as usize;
                let w = m2[sigma[u] as usize];
                if sigma[v] == u32::MAX {
                    sigma[v] = w;
                    queue.push_back(v);
                }
            }
        }
        if sigma.contains(&u32::MAX) {
            return false;
        }
        let mut seen = vec![false; n];
        if sigma.iter().any(|&s| std::mem::replace(&mut seen[s as usize], true)) {
            return false;
        }
        maps.iter().all(|(m1, m2)| (0..n).all(|p| sigma[m1[p] as usize] == m2[sigma[p] as usize]))
    })
}

/// Number of classes of `pairs` under `equivalent`, by union into
/// representatives.
pub fn count_classes(
    pairs: &[(usize, usize)],
    mut equivalent: impl FnMut((usize, usize), (usize, usize)) -> bool,
) -> usize {
    let mut reps: Vec<(usize, usize)> = Vec::new();
    for &p in pairs {
        if !reps.iter().any(|&r| equivalent(r, p)) {
            reps.push(p);
        }
    }
    reps.len()
}

/// All generating pairs of `g` satisfying `keep`.
pub fn generating_pairs(g: &FinGroup, keep: impl Fn(usize, usize) -> bool) -> Vec<(usize, usize)> {
    let n = g.order();
    let mut out = Vec::new();
    for x in 0..n {
        for y in 0..n {
            if keep(x, y) && g.generates(&[x, y]) {
                out.push((x, y));
            }
        }
    }
    out
}

/// Every catalog group of order at most `max`.
pub fn small_catalog_groups(max: u64) -> Vec<FinGroup> {
    let mut out = Vec::new();
    for n in 1..=max {
        let mut specs = catalog::all_specs_of_order(n);
        if n % 4 == 0 && n > 4 && hurwitz::arith::is_prime(n / 4) {
            for s in catalog::specs_of_order_4p(n / 4) {
                if !specs.contains(&s) {
                    specs.push(s);
                }
            }
        }
        for s in [GroupSpec::Abelian(vec![2, 2]), GroupSpec::Alt(4), GroupSpec::Abelian(vec![2, 2, 2])] {
            if s.expected_order() == Some(n) && !specs.contains(&s) {
                specs.push(s);
            }
        }
        for s in specs {
            if let Ok(g) = s.build(1000) {
                out.push(g.with_name(s.to_string()));
            }
        }
    }
    out
}
