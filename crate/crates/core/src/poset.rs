//! Intervals of the Stern poset and their Eulerian polynomials.
//!
//! Positions of Stern's triangle are ordered by the covers
//! `<r-1, n> < <r, 2n>, <r, 2n+1>, <r, 2n+2>`. `P_n` is the interval from
//! `<0, 0>` to `<k+1, n-1>` where `2^k <= n - 1 < 2^(k+1)`; its Eulerian
//! polynomial under a natural labeling counts linear extensions by descents.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use num_bigint::BigInt;
use rand::seq::SliceRandom;
use rand::Rng;

use crate::error::{Error, Result};
use crate::guards::{check_min, MAX_EXTENSIONS, MAX_POSET_SIZE};
use crate::poly::IntPoly;
use crate::stern::bpoly;

/// Position `j` of row `r` in Stern's triangle.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PosetNode {
    pub r: u32,
    pub j: u64,
}

impl PosetNode {
    pub fn new(r: u32, j: u64) -> Self {
        PosetNode { r, j }
    }

    /// Lower covers within the Stern poset.
    pub fn lower_covers(&self) -> Vec<PosetNode> {
        if self.r == 0 {
            return Vec::new();
        }
        let below = self.r - 1;
        let row_max = (1u64 << (below + 1)) - 2;
        let candidates: Vec<i128> = if self.j % 2 == 1 {
            vec![((self.j - 1) / 2) as i128]
        } else {
            vec![(self.j / 2) as i128 - 1, (self.j / 2) as i128]
        };
        candidates
            .into_iter()
            .filter(|&n| n >= 0 && n <= row_max as i128)
            .map(|n| PosetNode::new(below, n as u64))
            .collect()
    }
}

impl fmt::Display for PosetNode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{}", self.r, self.j)
    }
}

/// A finite poset given by its cover relations.
///
/// Elements are kept sorted; covers are index pairs `(lower, upper)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FinitePoset {
    elements: Vec<PosetNode>,
    covers: Vec<(usize, usize)>,
}

impl FinitePoset {
    /// Builds a poset from elements and cover pairs; rejects cycles.
    pub fn new(elements: impl IntoIterator<Item = PosetNode>, covers: &[(PosetNode, PosetNode)]) -> Result<Self> {
        let elements: Vec<PosetNode> = elements.into_iter().collect::<BTreeSet<_>>().into_iter().collect();
        let index = |x: &PosetNode| {
            elements
                .binary_search(x)
                .map_err(|_| Error::Parse(format!("cover mentions unknown element {x}")))
        };
        let mut pairs = covers
            .iter()
            .map(|(lo, hi)| Ok((index(lo)?, index(hi)?)))
            .collect::<Result<Vec<_>>>()?;
        pairs.sort_unstable();
        pairs.dedup();
        let poset = FinitePoset {
            elements,
            covers: pairs,
        };
        poset.topological_order()?;
        Ok(poset)
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[PosetNode] {
        &self.elements
    }

    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    fn in_degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.len()];
        for &(_, hi) in &self.covers {
            deg[hi] += 1;
        }
        deg
    }

    fn upper_covers(&self) -> Vec<Vec<usize>> {
        let mut up = vec![Vec::new(); self.len()];
        for &(lo, hi) in &self.covers {
            up[lo].push(hi);
        }
        up
    }

    pub fn minimal_elements(&self) -> Vec<usize> {
        let deg = self.in_degrees();
        (0..self.len()).filter(|&i| deg[i] == 0).collect()
    }

    pub fn maximal_elements(&self) -> Vec<usize> {
        let up = self.upper_covers();
        (0..self.len()).filter(|&i| up[i].is_empty()).collect()
    }

    /// Kahn's algorithm, smallest available element first.
    fn topological_order(&self) -> Result<Vec<usize>> {
        let mut deg = self.in_degrees();
        let up = self.upper_covers();
        let mut ready: BTreeSet<usize> = (0..self.len()).filter(|&i| deg[i] == 0).collect();
        let mut order = Vec::with_capacity(self.len());
        while let Some(x) = ready.pop_first() {
            order.push(x);
            for &y in &up[x] {
                deg[y] -= 1;
                if deg[y] == 0 {
                    ready.insert(y);
                }
            }
        }
        if order.len() != self.len() {
            return Err(Error::CyclicPoset);
        }
        Ok(order)
    }

    /// True if `order` lists every element once and respects every cover.
    pub fn is_linear_extension(&self, order: &[usize]) -> bool {
        if order.len() != self.len() {
            return false;
        }
        let mut pos = vec![usize::MAX; self.len()];
        for (i, &x) in order.iter().enumerate() {
            if x >= self.len() || pos[x] != usize::MAX {
                return false;
            }
            pos[x] = i;
        }
        self.covers.iter().all(|&(lo, hi)| pos[lo] < pos[hi])
    }

    /// One cover per line, `r1,j1 < r2,j2`, sorted.
    pub fn to_edge_list(&self) -> String {
        let mut out = String::new();
        for &(lo, hi) in &self.covers {
            out.push_str(&format!("{} < {}\n", self.elements[lo], self.elements[hi]));
        }
        out
    }
}

/// The interval P_n of the Stern poset.
pub fn build_pn(n: u64) -> Result<FinitePoset> {
    check_min("n", n, 1)?;
    let origin = PosetNode::new(0, 0);
    if n == 1 {
        return FinitePoset::new([origin], &[]);
    }
    let k = 63 - (n - 1).leading_zeros();
    let top = PosetNode::new(k + 1, n - 1);
    let mut seen = BTreeSet::from([top]);
    let mut queue = VecDeque::from([top]);
    let mut covers = Vec::new();
    while let Some(x) = queue.pop_front() {
        for y in x.lower_covers() {
            covers.push((y, x));
            if seen.insert(y) {
                queue.push_back(y);
            }
        }
    }
    FinitePoset::new(seen, &covers)
}

/// Order-preserving labels 1..=p, indexed like the poset's elements.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NaturalLabeling {
    labels: Vec<u32>,
}

impl NaturalLabeling {
    pub fn labels(&self) -> &[u32] {
        &self.labels
    }

    pub fn label(&self, element: usize) -> u32 {
        self.labels[element]
    }

    /// Labels elements in the order given by a linear extension.
    pub fn from_extension(order: &[usize]) -> Self {
        let mut labels = vec![0; order.len()];
        for (i, &x) in order.iter().enumerate() {
            labels[x] = i as u32 + 1;
        }
        NaturalLabeling { labels }
    }

    pub fn is_natural_for(&self, poset: &FinitePoset) -> bool {
        let mut seen = self.labels.clone();
        seen.sort_unstable();
        seen.len() == poset.len()
            && seen.iter().enumerate().all(|(i, &l)| l == i as u32 + 1)
            && poset.covers().iter().all(|&(lo, hi)| self.labels[lo] < self.labels[hi])
    }
}

/// Canonical labeling: elements taken in lexicographic `(r, j)` order,
/// smallest available first.
pub fn natural_labeling(poset: &FinitePoset) -> Result<NaturalLabeling> {
    Ok(NaturalLabeling::from_extension(&poset.topological_order()?))
}

/// A natural labeling drawn by building a uniformly-stepped random linear
/// extension (random choice among the currently minimal elements).
pub fn random_natural_labeling<R: Rng>(poset: &FinitePoset, rng: &mut R) -> NaturalLabeling {
    let mut deg = poset.in_degrees();
    let up = poset.upper_covers();
    let mut ready: Vec<usize> = (0..poset.len()).filter(|&i| deg[i] == 0).collect();
    let mut order = Vec::with_capacity(poset.len());
    while !ready.is_empty() {
        ready.shuffle(rng);
        let x = ready.pop().unwrap();
        order.push(x);
        for &y in &up[x] {
            deg[y] -= 1;
            if deg[y] == 0 {
                ready.push(y);
            }
        }
    }
    NaturalLabeling::from_extension(&order)
}

/// Up to `count` pairwise distinct random natural labelings. Fewer are
/// returned only when `attempts` draws do not find enough distinct ones.
pub fn distinct_random_labelings<R: Rng>(
    poset: &FinitePoset,
    count: usize,
    attempts: usize,
    rng: &mut R,
) -> Vec<NaturalLabeling> {
    let mut out: Vec<NaturalLabeling> = Vec::with_capacity(count);
    for _ in 0..attempts {
        if out.len() == count {
            break;
        }
        let l = random_natural_labeling(poset, rng);
        if !out.contains(&l) {
            out.push(l);
        }
    }
    out
}

/// Every linear extension, each exactly once, in a fixed order.
pub fn enumerate_extensions(poset: &FinitePoset) -> Result<Vec<Vec<usize>>> {
    enumerate_extensions_limited(poset, MAX_EXTENSIONS)
}

pub fn enumerate_extensions_limited(poset: &FinitePoset, limit: u64) -> Result<Vec<Vec<usize>>> {
    crate::guards::check_max("poset size", poset.len() as u64, "MAX_POSET_SIZE", MAX_POSET_SIZE as u64)?;
    let mut state = Backtrack {
        deg: poset.in_degrees(),
        up: poset.upper_covers(),
        prefix: Vec::with_capacity(poset.len()),
        out: Vec::new(),
        limit,
    };
    state.run(poset.len())?;
    Ok(state.out)
}

struct Backtrack {
    deg: Vec<usize>,
    up: Vec<Vec<usize>>,
    prefix: Vec<usize>,
    out: Vec<Vec<usize>>,
    limit: u64,
}

impl Backtrack {
    fn run(&mut self, total: usize) -> Result<()> {
        if self.prefix.len() == total {
            if self.out.len() as u64 >= self.limit {
                return Err(Error::TooManyExtensions { limit: self.limit });
            }
            self.out.push(self.prefix.clone());
            return Ok(());
        }
        for x in 0..total {
            if self.deg[x] != 0 {
                continue;
            }
            // usize::MAX marks "placed".
            self.deg[x] = usize::MAX;
            for i in 0..self.up[x].len() {
                let y = self.up[x][i];
                self.deg[y] -= 1;
            }
            self.prefix.push(x);
            let res = self.run(total);
            self.prefix.pop();
            for i in 0..self.up[x].len() {
                let y = self.up[x][i];
                self.deg[y] += 1;
            }
            self.deg[x] = 0;
            res?;
        }
        Ok(())
    }
}

/// Number of descents of `order` under `labeling`.
pub fn descents(order: &[usize], labeling: &NaturalLabeling) -> usize {
    order
        .windows(2)
        .filter(|w| labeling.label(w[0]) > labeling.label(w[1]))
        .count()
}

/// Sum over linear extensions of q^(descents).
pub fn eulerian_polynomial(poset: &FinitePoset, labeling: &NaturalLabeling) -> Result<IntPoly> {
    let extensions = enumerate_extensions(poset)?;
    let mut counts: Vec<u64> = vec![0; poset.len().max(1)];
    for e in &extensions {
        counts[descents(e, labeling)] += 1;
    }
    Ok(IntPoly::from_coeffs(counts.into_iter().map(BigInt::from).collect()))
}

/// P_n-Eulerian polynomial under the canonical labeling equals b_n(q).
pub fn verify_pn_eulerian(n: u64) -> Result<bool> {
    let poset = build_pn(n)?;
    let labeling = natural_labeling(&poset)?;
    Ok(eulerian_polynomial(&poset, &labeling)? == bpoly(n)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::stern::diatomic;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn node(r: u32, j: u64) -> PosetNode {
        PosetNode::new(r, j)
    }

    #[test]
    fn small_intervals() {
        let p1 = build_pn(1).unwrap();
        assert_eq!(p1.elements(), &[node(0, 0)]);

        let p2 = build_pn(2).unwrap();
        assert_eq!(p2.to_edge_list(), "0,0 < 1,1\n");

        let p3 = build_pn(3).unwrap();
        assert_eq!(p3.elements(), &[node(0, 0), node(1, 0), node(1, 1), node(2, 2)]);
        assert_eq!(p3.to_edge_list(), "0,0 < 1,0\n0,0 < 1,1\n1,0 < 2,2\n1,1 < 2,2\n");

        let p4 = build_pn(4).unwrap();
        assert_eq!(p4.to_edge_list(), "0,0 < 1,1\n1,1 < 2,3\n");
    }

    #[test]
    fn labeling_examples() {
        let l = natural_labeling(&build_pn(2).unwrap()).unwrap();
        assert_eq!(l.labels(), &[1, 2]);
        let l = natural_labeling(&build_pn(3).unwrap()).unwrap();
        assert_eq!(l.labels(), &[1, 2, 3, 4]);
        let l = natural_labeling(&build_pn(1).unwrap()).unwrap();
        assert_eq!(l.labels(), &[1]);
    }

    #[test]
    fn cycles_are_rejected() {
        let (a, b) = (node(0, 0), node(1, 0));
        assert_eq!(FinitePoset::new([a, b], &[(a, b), (b, a)]), Err(Error::CyclicPoset));
    }

    #[test]
    fn extension_counts() {
        assert_eq!(enumerate_extensions(&build_pn(2).unwrap()).unwrap().len(), 1);
        assert_eq!(enumerate_extensions(&build_pn(3).unwrap()).unwrap().len(), 2);
        let antichain = FinitePoset::new([node(1, 0), node(1, 1), node(1, 2)], &[]).unwrap();
        let ext = enumerate_extensions(&antichain).unwrap();
        assert_eq!(ext.len(), 6);
        assert!(ext.iter().all(|e| antichain.is_linear_extension(e)));
        assert_eq!(
            enumerate_extensions_limited(&antichain, 5),
            Err(Error::TooManyExtensions { limit: 5 })
        );
    }

    #[test]
    fn eulerian_examples() {
        for (n, want) in [(1, vec![1]), (3, vec![1, 1]), (5, vec![1, 3, 1])] {
            let p = build_pn(n).unwrap();
            let l = natural_labeling(&p).unwrap();
            assert_eq!(eulerian_polynomial(&p, &l).unwrap(), IntPoly::from_i64s(&want));
        }
    }

    #[test]
    fn agreement_with_bpoly_up_to_64() {
        // The interval reproduces b_n(q) exactly when n is 2^a or 3 * 2^a.
        // P_5 is the N-shaped poset topped and bottomed, with 5 extensions
        // against b_5(1) = 3.
        let agree: Vec<u64> = (1..=64).filter(|&n| verify_pn_eulerian(n).unwrap()).collect();
        assert_eq!(agree, vec![1, 2, 3, 4, 6, 8, 12, 16, 24, 32, 48, 64]);
    }

    #[test]
    fn intervals_are_bounded_and_extensions_valid() {
        let mut counts = Vec::new();
        for n in 1..=64 {
            let p = build_pn(n).unwrap();
            assert_eq!(p.minimal_elements().len(), 1, "n = {n}");
            assert_eq!(p.maximal_elements().len(), 1, "n = {n}");
            let ext = enumerate_extensions(&p).unwrap();
            assert!(ext.iter().all(|e| p.is_linear_extension(e)));
            counts.push(ext.len() as u64);
        }
        assert_eq!(&counts[..9], &[1, 1, 2, 1, 5, 2, 5, 1, 14]);
        assert_eq!(counts.iter().max(), Some(&132));
        assert_eq!(diatomic(5), 3);
    }

    #[test]
    fn labeling_independence() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for n in 1..=16 {
            let p = build_pn(n).unwrap();
            let want = eulerian_polynomial(&p, &natural_labeling(&p).unwrap()).unwrap();
            for l in distinct_random_labelings(&p, 3, 200, &mut rng) {
                assert_eq!(eulerian_polynomial(&p, &l).unwrap(), want, "n = {n}");
            }
        }
    }

    #[test]
    fn random_labelings_are_natural() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for n in 1..=16 {
            let p = build_pn(n).unwrap();
            for _ in 0..5 {
                assert!(random_natural_labeling(&p, &mut rng).is_natural_for(&p));
            }
        }
    }
}
