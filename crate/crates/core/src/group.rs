//! Table-based finite permutation groups.
//!
//! Every element is enumerated up front by breadth-first closure over the
//! generators, so the group must fit under an order cap. Element `0` is always
//! the identity and element indices follow BFS discovery order, which makes
//! class representatives and all downstream output reproducible.

use std::collections::{HashMap, VecDeque};
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::perm::Perm;

/// Default bound on the order of groups built by [`FinGroup::from_generators`].
pub const DEFAULT_CAP: usize = 200_000;

/// Groups up to this order also keep a full multiplication table.
const TABLE_LIMIT: usize = 2048;

const UNSET: u32 = u32::MAX;

#[derive(Debug, Clone)]
pub struct ConjugacyClass {
    pub label: String,
    pub element_order: u32,
    /// Sorted element indices.
    pub members: Vec<usize>,
    /// Member whose permutation is lexicographically least.
    pub representative: usize,
}

impl ConjugacyClass {
    pub fn size(&self) -> usize {
        self.members.len()
    }
}

#[derive(Debug, Clone)]
pub struct Classes {
    list: Vec<ConjugacyClass>,
    class_of: Vec<u32>,
}

impl Classes {
    pub fn list(&self) -> &[ConjugacyClass] {
        &self.list
    }

    pub fn class_of(&self, element: usize) -> usize {
        self.class_of[element] as usize
    }

    pub fn len(&self) -> usize {
        self.list.len()
    }

    pub fn is_empty(&self) -> bool {
        self.list.is_empty()
    }
}

#[derive(Clone)]
pub struct FinGroup {
    name: String,
    degree: usize,
    generators: Vec<usize>,
    elements: Vec<Perm>,
    index: HashMap<Perm, u32>,
    orders: Vec<u32>,
    inverses: Vec<u32>,
    /// `right[s][e]` is the index of `e * generator[s]`.
    right: Vec<Vec<u32>>,
    /// BFS word of each element in generator indices, flattened.
    word_data: Vec<u8>,
    word_start: Vec<u32>,
    table: Option<Vec<u32>>,
    classes: OnceLock<Classes>,
}

impl std::fmt::Debug for FinGroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("FinGroup")
            .field("name", &self.name)
            .field("degree", &self.degree)
            .field("order", &self.order())
            .finish()
    }
}

impl FinGroup {
    /// Enumerates the group generated by `gens` by breadth-first closure.
    ///
    /// Fails with [`Error::CapExceeded`] as soon as more than `cap` elements
    /// have been found.
    pub fn from_generators(name: impl Into<String>, gens: &[Perm], cap: usize) -> Result<FinGroup> {
        let name = name.into();
        let degree = match gens.first() {
            Some(g) => g.degree(),
            None => return Err(Error::InvalidParameters("no generators".into())),
        };
        for g in gens {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch { expected: degree, found: g.degree() });
            }
        }
        if gens.len() > u8::MAX as usize {
            return Err(Error::InvalidParameters("too many generators".into()));
        }

        let id = Perm::identity(degree);
        let mut elements = vec![id.clone()];
        let mut index = HashMap::new();
        index.insert(id, 0u32);
        let mut right: Vec<Vec<u32>> = vec![Vec::new(); gens.len()];
        let mut parent: Vec<(u32, u8)> = vec![(UNSET, 0)];

        let mut head = 0;
        while head < elements.len() {
            for (s, g) in gens.iter().enumerate() {
                let p = elements[head].then(g);
                let j = match index.get(&p) {
                    Some(&j) => j,
                    None => {
                        let j = elements.len() as u32;
                        if elements.len() >= cap {
                            return Err(Error::CapExceeded { cap, what: name });
                        }
                        index.insert(p.clone(), j);
                        elements.push(p);
                        parent.push((head as u32, s as u8));
                        j
                    }
                };
                right[s].push(j);
            }
            head += 1;
        }

        let n = elements.len();
        let mut word_data = Vec::new();
        let mut word_start = Vec::with_capacity(n + 1);
        let mut scratch = Vec::new();
        for e in 0..n {
            word_start.push(word_data.len() as u32);
            scratch.clear();
            let mut cur = e;
            while parent[cur].0 != UNSET {
                scratch.push(parent[cur].1);
                cur = parent[cur].0 as usize;
            }
            word_data.extend(scratch.iter().rev());
        }
        word_start.push(word_data.len() as u32);

        let inverses = elements.iter().map(|p| index[&p.inverse()]).collect();
        let orders = elements.iter().map(|p| p.order() as u32).collect();
        let generators = gens.iter().map(|g| index[g] as usize).collect();

        let mut group = FinGroup {
            name,
            degree,
            generators,
            elements,
            index,
            orders,
            inverses,
            right,
            word_data,
            word_start,
            table: None,
            classes: OnceLock::new(),
        };
        if n <= TABLE_LIMIT {
            group.table = Some(group.build_table());
        }
        Ok(group)
    }

    /// Fills `table[a * n + b]` column by column: `a * b = (a * parent(b)) * s`.
    fn build_table(&self) -> Vec<u32> {
        let n = self.order();
        let mut table = vec![0u32; n * n];
        for a in 0..n {
            table[a * n] = a as u32;
        }
        for b in 1..n {
            let w = self.word(b);
            let s = *w.last().unwrap() as usize;
            let pb = self.word_parent(b);
            for a in 0..n {
                table[a * n + b] = self.right[s][table[a * n + pb] as usize];
            }
        }
        table
    }

    fn word_parent(&self, b: usize) -> usize {
        // the parent is the element spelled by the word minus its last letter
        let w = self.word(b);
        let mut cur = 0usize;
        for &s in &w[..w.len() - 1] {
            cur = self.right[s as usize][cur] as usize;
        }
        cur
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> FinGroup {
        self.name = name.into();
        self
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn identity(&self) -> usize {
        0
    }

    /// Element indices of the defining generators.
    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn generator_perms(&self) -> Vec<Perm> {
        self.generators.iter().map(|&g| self.elements[g].clone()).collect()
    }

    pub fn element(&self, e: usize) -> &Perm {
        &self.elements[e]
    }

    pub fn elements(&self) -> &[Perm] {
        &self.elements
    }

    pub fn index_of(&self, p: &Perm) -> Option<usize> {
        self.index.get(p).map(|&i| i as usize)
    }

    /// BFS word of `e` as a sequence of generator positions.
    pub fn word(&self, e: usize) -> &[u8] {
        &self.word_data[self.word_start[e] as usize..self.word_start[e + 1] as usize]
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        let n = self.order();
        if let Some(t) = &self.table {
            return t[a * n + b] as usize;
        }
        let mut cur = a;
        for &s in self.word(b) {
            cur = self.right[s as usize][cur] as usize;
        }
        cur
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inverses[a] as usize
    }

    #[inline]
    pub fn element_order(&self, a: usize) -> u32 {
        self.orders[a]
    }

    pub fn pow(&self, a: usize, k: u64) -> usize {
        let mut result = 0;
        let mut base = a;
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                result = self.mul(result, base);
            }
            base = self.mul(base, base);
            k >>= 1;
        }
        result
    }

    /// `g^-1 a g`.
    pub fn conj(&self, a: usize, g: usize) -> usize {
        self.mul(self.mul(self.inv(g), a), g)
    }

    /// `a^-1 b^-1 a b`.
    pub fn commutator(&self, a: usize, b: usize) -> usize {
        self.mul(self.mul(self.inv(a), self.inv(b)), self.mul(a, b))
    }

    /// Map `u -> u * g` over all elements.
    pub fn right_mult_map(&self, g: usize) -> Vec<u32> {
        (0..self.order()).map(|u| self.mul(u, g) as u32).collect()
    }

    pub fn check_element(&self, a: usize) -> Result<()> {
        if a < self.order() {
            Ok(())
        } else {
            Err(Error::NotInGroup)
        }
    }

    /// Membership vector of the subgroup generated by `gens`.
    pub fn closure(&self, gens: &[usize]) -> Vec<bool> {
        self.closure_bounded(gens, usize::MAX).0
    }

    /// Closure that stops once more than `limit` elements are found.
    /// Returns the membership vector and the number of elements found.
    pub fn closure_bounded(&self, gens: &[usize], limit: usize) -> (Vec<bool>, usize) {
        let n = self.order();
        let maps: Vec<Vec<u32>> = gens.iter().map(|&g| self.right_mult_map(g)).collect();
        let mut seen = vec![false; n];
        seen[0] = true;
        let mut queue = VecDeque::from([0usize]);
        let mut count = 1;
        while let Some(u) = queue.pop_front() {
            for m in &maps {
                let v = m[u] as usize;
                if !seen[v] {
                    seen[v] = true;
                    count += 1;
                    if count > limit {
                        return (seen, count);
                    }
                    queue.push_back(v);
                }
            }
        }
        (seen, count)
    }

    pub fn subgroup_order(&self, gens: &[usize]) -> usize {
        self.closure_bounded(gens, usize::MAX).1
    }

    pub fn generates(&self, gens: &[usize]) -> bool {
        self.subgroup_order(gens) == self.order()
    }

    /// Generation test specialised to two elements via precomputed
    /// right-multiplication maps.
    pub(crate) fn generates_with_maps(&self, mx: &[u32], my: &[u32], seen: &mut Vec<bool>) -> bool {
        let n = self.order();
        seen.clear();
        seen.resize(n, false);
        seen[0] = true;
        let mut stack = vec![0usize];
        let mut count = 1;
        while let Some(u) = stack.pop() {
            for m in [mx, my] {
                let v = m[u] as usize;
                if !seen[v] {
                    seen[v] = true;
                    count += 1;
                    stack.push(v);
                }
            }
        }
        count == n
    }

    /// Smallest normal subgroup containing `seeds`, as sorted element indices.
    pub fn normal_closure(&self, seeds: &[usize]) -> Vec<usize> {
        let mut gens: Vec<usize> = seeds.iter().copied().filter(|&s| s != 0).collect();
        gens.sort_unstable();
        gens.dedup();
        loop {
            let members = self.closure(&gens);
            let mut extra = None;
            'search: for &g in &self.generators {
                for &s in &gens {
                    let c = self.conj(s, g);
                    if !members[c] {
                        extra = Some(c);
                        break 'search;
                    }
                }
            }
            match extra {
                Some(c) => gens.push(c),
                None => return members.iter().enumerate().filter_map(|(i, &m)| m.then_some(i)).collect(),
            }
        }
    }

    fn derived_members(&self) -> Vec<usize> {
        let gens = &self.generators;
        let mut seeds = Vec::new();
        for (i, &a) in gens.iter().enumerate() {
            for &b in &gens[i + 1..] {
                seeds.push(self.commutator(a, b));
            }
        }
        self.normal_closure(&seeds)
    }

    pub fn commutator_subgroup(&self) -> Result<FinGroup> {
        let members = self.derived_members();
        let gens: Vec<Perm> =
            if members.len() == 1 { vec![Perm::identity(self.degree)] } else { self.minimal_generators(&members) };
        FinGroup::from_generators(format!("[{0},{0}]", self.name), &gens, self.order())
    }

    /// Greedy generating set for the subgroup with the given members.
    fn minimal_generators(&self, members: &[usize]) -> Vec<Perm> {
        let mut gens = Vec::new();
        let mut span = vec![false; self.order()];
        span[0] = true;
        for &m in members {
            if !span[m] {
                gens.push(m);
                span = self.closure(&gens);
            }
        }
        gens.into_iter().map(|g| self.elements[g].clone()).collect()
    }

    pub fn is_perfect(&self) -> bool {
        self.derived_members().len() == self.order()
    }

    pub fn is_abelian(&self) -> bool {
        let g = &self.generators;
        g.iter().all(|&a| g.iter().all(|&b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Simple means nontrivial with no proper nontrivial normal subgroup.
    pub fn is_simple(&self) -> bool {
        if self.order() == 1 {
            return false;
        }
        self.classes().list().iter().skip(1).all(|c| self.normal_closure(&[c.representative]).len() == self.order())
    }

    pub fn centralizer_size(&self, x: usize) -> Result<usize> {
        self.check_element(x)?;
        Ok((0..self.order()).filter(|&g| self.mul(g, x) == self.mul(x, g)).count())
    }

    /// Conjugacy classes, computed once and sorted by element order, class
    /// size and the lexicographically least member permutation.
    pub fn classes(&self) -> &Classes {
        self.classes.get_or_init(|| self.compute_classes())
    }

    fn compute_classes(&self) -> Classes {
        let n = self.order();
        let gens = &self.generators;
        let mut assigned = vec![false; n];
        let mut raw: Vec<Vec<usize>> = Vec::new();
        for start in 0..n {
            if assigned[start] {
                continue;
            }
            assigned[start] = true;
            let mut members = vec![start];
            let mut head = 0;
            while head < members.len() {
                let e = members[head];
                head += 1;
                for &g in gens {
                    let c = self.conj(e, g);
                    if !assigned[c] {
                        assigned[c] = true;
                        members.push(c);
                    }
                }
            }
            members.sort_unstable();
            raw.push(members);
        }

        let mut list: Vec<ConjugacyClass> = raw
            .into_iter()
            .map(|members| {
                let representative =
                    *members.iter().min_by(|&&a, &&b| self.elements[a].cmp(&self.elements[b])).unwrap();
                ConjugacyClass { label: String::new(), element_order: self.orders[members[0]], members, representative }
            })
            .collect();
        list.sort_by(|a, b| {
            (a.element_order, a.size())
                .cmp(&(b.element_order, b.size()))
                .then_with(|| self.elements[a.representative].cmp(&self.elements[b.representative]))
        });

        let mut per_order: HashMap<u32, usize> = HashMap::new();
        for c in &mut list {
            let k = per_order.entry(c.element_order).or_insert(0);
            c.label = format!("{}{}", c.element_order, class_letter(*k));
            *k += 1;
        }
        let mut class_of = vec![0u32; n];
        for (i, c) in list.iter().enumerate() {
            for &m in &c.members {
                class_of[m] = i as u32;
            }
        }
        Classes { list, class_of }
    }

    /// Element-order histogram as sorted `(order, count)` pairs.
    pub fn order_histogram(&self) -> Vec<(u32, usize)> {
        let mut h: std::collections::BTreeMap<u32, usize> = Default::default();
        for &o in &self.orders {
            *h.entry(o).or_default() += 1;
        }
        h.into_iter().collect()
    }

    /// Sorted multiset of `(element order, class size)` over all classes.
    pub fn class_fingerprint(&self) -> Vec<(u32, usize)> {
        let mut v: Vec<_> = self.classes().list().iter().map(|c| (c.element_order, c.size())).collect();
        v.sort_unstable();
        v
    }

    /// The right regular representation on `|G|` points.
    pub fn regular_representation(&self) -> Result<FinGroup> {
        let gens: Vec<Perm> =
            self.generators.iter().map(|&g| Perm::from_images_unchecked(self.right_mult_map(g))).collect();
        FinGroup::from_generators(format!("reg({})", self.name), &gens, self.order())
    }
}

fn class_letter(k: usize) -> String {
    let letter = (b'A' + (k % 26) as u8) as char;
    if k < 26 {
        letter.to_string()
    } else {
        format!("{letter}{}", k / 26)
    }
}

/// Does `x1 -> x2, y1 -> y2` extend to an automorphism of `g`?
///
/// Both pairs must generate `g`.
pub fn pair_isomorphic(g: &FinGroup, p1: (usize, usize), p2: (usize, usize)) -> Result<bool> {
    pairs_isomorphic(g, p1, g, p2)
}

/// Does `x1 -> x2, y1 -> y2` extend to an isomorphism `g1 -> g2`?
pub fn pairs_isomorphic(g1: &FinGroup, p1: (usize, usize), g2: &FinGroup, p2: (usize, usize)) -> Result<bool> {
    for (g, (x, y)) in [(g1, p1), (g2, p2)] {
        g.check_element(x)?;
        g.check_element(y)?;
        if !g.generates(&[x, y]) {
            return Err(Error::NotGenerating(format!("pair in {}", g.name())));
        }
    }
    Ok(pairs_isomorphic_unchecked(g1, p1, g2, p2))
}

/// Cayley-graph propagation from `identity -> identity`; assumes both pairs
/// generate their groups.
pub(crate) fn pairs_isomorphic_unchecked(
    g1: &FinGroup,
    (x1, y1): (usize, usize),
    g2: &FinGroup,
    (x2, y2): (usize, usize),
) -> bool {
    let n = g1.order();
    if n != g2.order() || g1.element_order(x1) != g2.element_order(x2) || g1.element_order(y1) != g2.element_order(y2) {
        return false;
    }
    let steps = [(g1.right_mult_map(x1), g2.right_mult_map(x2)), (g1.right_mult_map(y1), g2.right_mult_map(y2))];
    let mut tau = vec![UNSET; n];
    let mut used = vec![false; n];
    tau[0] = 0;
    used[0] = true;
    let mut queue = VecDeque::from([0usize]);
    let mut assigned = 1;
    while let Some(u) = queue.pop_front() {
        let tu = tau[u] as usize;
        for (m1, m2) in &steps {
            let v = m1[u] as usize;
            let w = m2[tu];
            if tau[v] == UNSET {
                if used[w as usize] {
                    return false;
                }
                tau[v] = w;
                used[w as usize] = true;
                assigned += 1;
                queue.push_back(v);
            } else if tau[v] != w {
                return false;
            }
        }
    }
    assigned == n
}
