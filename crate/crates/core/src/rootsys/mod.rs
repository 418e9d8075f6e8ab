//! Exact root systems of the simple complex Lie algebras.
//!
//! Everything lives in the simple-root basis with integer coordinates. The
//! invariant form is the symmetrized Cartan matrix `D·A`, scaled so the
//! shortest roots have squared length 2, which keeps every pairing integral.

mod dynkin;
mod weyl;

pub use dynkin::{ComponentType, SubsystemType};
pub use weyl::{ReflectionGroup, WeylElement, DEFAULT_WEYL_CAP};

use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// One of the seven families of simple Lie algebras.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Series {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Series {
    pub fn letter(self) -> char {
        match self {
            Series::A => 'A',
            Series::B => 'B',
            Series::C => 'C',
            Series::D => 'D',
            Series::E => 'E',
            Series::F => 'F',
            Series::G => 'G',
        }
    }

    fn from_letter(c: char) -> Option<Self> {
        Some(match c.to_ascii_uppercase() {
            'A' => Series::A,
            'B' => Series::B,
            'C' => Series::C,
            'D' => Series::D,
            'E' => Series::E,
            'F' => Series::F,
            'G' => Series::G,
            _ => return None,
        })
    }
}

/// A Dynkin type such as `A2`, `B3` or `E8`, with Bourbaki node numbering.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DynkinType {
    series: Series,
    rank: usize,
}

impl DynkinType {
    pub fn new(series: Series, rank: usize) -> Result<Self> {
        let ok = match series {
            Series::A => rank >= 1,
            Series::B | Series::C => rank >= 2,
            Series::D => rank >= 3,
            Series::E => (6..=8).contains(&rank),
            Series::F => rank == 4,
            Series::G => rank == 2,
        };
        if !ok {
            return Err(Error::InvalidType(format!("{}{}", series.letter(), rank)));
        }
        Ok(DynkinType { series, rank })
    }

    pub fn series(&self) -> Series {
        self.series
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Number of positive roots.
    pub fn num_positive_roots(&self) -> usize {
        let n = self.rank;
        match self.series {
            Series::A => n * (n + 1) / 2,
            Series::B | Series::C => n * n,
            Series::D => n * (n - 1),
            Series::E => match n {
                6 => 36,
                7 => 63,
                _ => 120,
            },
            Series::F => 24,
            Series::G => 6,
        }
    }

    /// The symmetrized Cartan matrix `(α_i, α_j)`, short roots of length² 2.
    fn gram(&self) -> Vec<Vec<i32>> {
        let n = self.rank;
        let mut g = vec![vec![0i32; n]; n];
        let mut link = |i: usize, j: usize, v: i32| {
            g[i][j] = v;
            g[j][i] = v;
        };
        match self.series {
            Series::A => {
                for i in 0..n.saturating_sub(1) {
                    link(i, i + 1, -1);
                }
            }
            Series::B => {
                for i in 0..n - 1 {
                    link(i, i + 1, -2);
                }
            }
            Series::C => {
                for i in 0..n - 2 {
                    link(i, i + 1, -1);
                }
                link(n - 2, n - 1, -2);
            }
            Series::D => {
                for i in 0..n - 2 {
                    link(i, i + 1, -1);
                }
                link(n - 3, n - 1, -1);
            }
            Series::E => {
                link(0, 2, -1);
                link(1, 3, -1);
                for i in 2..n - 1 {
                    link(i, i + 1, -1);
                }
            }
            Series::F => {
                link(0, 1, -2);
                link(1, 2, -2);
                link(2, 3, -1);
            }
            Series::G => link(0, 1, -3),
        }
        let lengths: Vec<i32> = (0..n)
            .map(|i| match self.series {
                Series::A | Series::D | Series::E => 2,
                Series::B => {
                    if i + 1 < n {
                        4
                    } else {
                        2
                    }
                }
                Series::C => {
                    if i + 1 == n {
                        4
                    } else {
                        2
                    }
                }
                Series::F => {
                    if i < 2 {
                        4
                    } else {
                        2
                    }
                }
                Series::G => {
                    if i == 0 {
                        2
                    } else {
                        6
                    }
                }
            })
            .collect();
        for (i, l) in lengths.into_iter().enumerate() {
            g[i][i] = l;
        }
        g
    }

    /// Permutations of the node set induced by diagram automorphisms,
    /// including the identity.
    pub fn diagram_automorphisms(&self) -> Vec<Vec<usize>> {
        let n = self.rank;
        let id: Vec<usize> = (0..n).collect();
        let mut out = vec![id.clone()];
        match self.series {
            Series::A if n > 1 => out.push((0..n).rev().collect()),
            Series::D if n == 4 => {
                // triality permutes the three outer nodes 0, 2, 3
                let outer = [0usize, 2, 3];
                let perms = [[0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
                for p in perms {
                    let mut m = id.clone();
                    for k in 0..3 {
                        m[outer[k]] = outer[p[k]];
                    }
                    out.push(m);
                }
            }
            Series::D => {
                let mut m = id.clone();
                m.swap(n - 2, n - 1);
                out.push(m);
            }
            Series::E if n == 6 => out.push(vec![5, 1, 4, 3, 2, 0]),
            _ => {}
        }
        out
    }
}

impl fmt::Display for DynkinType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.series.letter(), self.rank)
    }
}

impl FromStr for DynkinType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut chars = s.chars();
        let series = chars
            .next()
            .and_then(Series::from_letter)
            .ok_or_else(|| Error::InvalidType(s.to_string()))?;
        let rank: usize = chars
            .as_str()
            .parse()
            .map_err(|_| Error::InvalidType(s.to_string()))?;
        DynkinType::new(series, rank)
    }
}

/// An element of the root lattice in simple-root coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Weight(pub Vec<i32>);

impl Weight {
    pub fn zero(rank: usize) -> Self {
        Weight(vec![0; rank])
    }

    pub fn simple(rank: usize, i: usize) -> Self {
        let mut v = vec![0; rank];
        v[i] = 1;
        Weight(v)
    }

    pub fn coords(&self) -> &[i32] {
        &self.0
    }

    pub fn height(&self) -> i32 {
        self.0.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    /// True when all coordinates are ≥ 0 and at least one is > 0.
    pub fn is_positive(&self) -> bool {
        self.0.iter().all(|&c| c >= 0) && !self.is_zero()
    }

    pub fn scaled(&self, k: i32) -> Weight {
        Weight(self.0.iter().map(|c| c * k).collect())
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl Add for &Weight {
    type Output = Weight;
    fn add(self, rhs: &Weight) -> Weight {
        Weight(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &Weight {
    type Output = Weight;
    fn sub(self, rhs: &Weight) -> Weight {
        Weight(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        Weight(self.0.iter().map(|a| -a).collect())
    }
}

/// Index of a root inside [`RootSystem::roots`].
pub type RootId = usize;

/// The full root system of a simple Lie algebra.
///
/// Roots are stored positives first, ordered by height and then by reverse
/// lexicographic order (so ids `0..rank` are the simple roots in node order), followed by their negatives in the same order, so that
/// `roots[i + N] == -roots[i]` for `N` positive roots.
#[derive(Debug, Clone)]
pub struct RootSystem {
    dynkin: DynkinType,
    cartan: Vec<Vec<i32>>,
    symmetrizer: Vec<i32>,
    gram: Vec<Vec<i32>>,
    roots: Vec<Weight>,
    index: HashMap<Weight, RootId>,
}

impl RootSystem {
    /// Closes the simple roots under the simple reflections.
    pub fn new(dynkin: DynkinType) -> Self {
        let n = dynkin.rank();
        let gram = dynkin.gram();
        let symmetrizer: Vec<i32> = (0..n).map(|i| gram[i][i] / 2).collect();
        let cartan: Vec<Vec<i32>> = (0..n)
            .map(|i| (0..n).map(|j| 2 * gram[i][j] / gram[i][i]).collect())
            .collect();

        let mut seen: HashMap<Weight, ()> = HashMap::new();
        let mut queue: VecDeque<Weight> = VecDeque::new();
        for i in 0..n {
            let s = Weight::simple(n, i);
            seen.insert(s.clone(), ());
            queue.push_back(s);
        }
        while let Some(v) = queue.pop_front() {
            for (i, row) in cartan.iter().enumerate() {
                // ⟨v, α_i∨⟩ = Σ_j v_j a_ij
                let c: i32 = row.iter().zip(&v.0).map(|(a, b)| a * b).sum();
                if c == 0 {
                    continue;
                }
                let mut w = v.clone();
                w.0[i] -= c;
                if !seen.contains_key(&w) {
                    seen.insert(w.clone(), ());
                    queue.push_back(w);
                }
            }
        }
        let mut positives: Vec<Weight> = seen.into_keys().filter(|w| w.is_positive()).collect();
        positives.sort_by(|a, b| a.height().cmp(&b.height()).then_with(|| b.cmp(a)));
        let negatives: Vec<Weight> = positives.iter().map(|w| -w).collect();
        let roots: Vec<Weight> = positives.into_iter().chain(negatives).collect();
        let index = roots
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, w)| (w, i))
            .collect();
        RootSystem {
            dynkin,
            cartan,
            symmetrizer,
            gram,
            roots,
            index,
        }
    }

    pub fn dynkin(&self) -> DynkinType {
        self.dynkin
    }

    pub fn rank(&self) -> usize {
        self.dynkin.rank()
    }

    /// `a_ij = 2(α_i, α_j) / (α_i, α_i)`.
    pub fn cartan_matrix(&self) -> &[Vec<i32>] {
        &self.cartan
    }

    /// Minimal positive integers `d_i` with `D·A` symmetric.
    pub fn symmetrizer(&self) -> &[i32] {
        &self.symmetrizer
    }

    pub fn roots(&self) -> &[Weight] {
        &self.roots
    }

    pub fn num_positive(&self) -> usize {
        self.roots.len() / 2
    }

    pub fn positive_roots(&self) -> &[Weight] {
        &self.roots[..self.num_positive()]
    }

    pub fn root(&self, id: RootId) -> &Weight {
        &self.roots[id]
    }

    pub fn root_id(&self, w: &Weight) -> Option<RootId> {
        self.index.get(w).copied()
    }

    pub fn is_positive(&self, id: RootId) -> bool {
        id < self.num_positive()
    }

    pub fn negate(&self, id: RootId) -> RootId {
        let n = self.num_positive();
        if id < n {
            id + n
        } else {
            id - n
        }
    }

    /// Id of the `i`-th simple root (0-based node).
    pub fn simple_root(&self, i: usize) -> RootId {
        debug_assert_eq!(self.roots[i], Weight::simple(self.rank(), i));
        i
    }

    /// The invariant form, exact on the root lattice.
    pub fn pairing(&self, u: &Weight, v: &Weight) -> i64 {
        let n = self.rank();
        let mut s = 0i64;
        for i in 0..n {
            if u.0[i] == 0 {
                continue;
            }
            for j in 0..n {
                s += u.0[i] as i64 * self.gram[i][j] as i64 * v.0[j] as i64;
            }
        }
        s
    }

    /// The reflection `v ↦ v − ⟨v, γ∨⟩ γ` in the root `gamma`.
    pub fn reflect(&self, v: &Weight, gamma: &Weight) -> Result<Weight> {
        let g = self
            .root_id(gamma)
            .ok_or_else(|| Error::NotARoot(gamma.0.clone()))?;
        Ok(self.reflect_by(v, g))
    }

    pub(crate) fn reflect_by(&self, v: &Weight, gamma: RootId) -> Weight {
        let gamma = &self.roots[gamma];
        let num = 2 * self.pairing(v, gamma);
        let den = self.pairing(gamma, gamma);
        debug_assert_eq!(num % den, 0, "root lattice pairing is integral");
        let c = (num / den) as i32;
        if c == 0 {
            return v.clone();
        }
        v - &gamma.scaled(c)
    }

    /// The reflection in `gamma` as a permutation of the root ids.
    pub fn reflection_permutation(&self, gamma: RootId) -> Vec<u16> {
        self.roots
            .iter()
            .map(|r| {
                let img = self.reflect_by(r, gamma);
                self.index[&img] as u16
            })
            .collect()
    }

    /// Whether `u + v` is a root, and which.
    pub fn sum_root(&self, u: RootId, v: RootId) -> Option<RootId> {
        self.root_id(&(&self.roots[u] + &self.roots[v]))
    }

    /// Whether the support of `id` lies inside `nodes`.
    pub fn in_span(&self, id: RootId, nodes: &[usize]) -> bool {
        self.roots[id]
            .0
            .iter()
            .enumerate()
            .all(|(i, &c)| c == 0 || nodes.contains(&i))
    }

    /// The indecomposable elements of a positive subsystem.
    ///
    /// `pos` must be the positive half of a subsystem of this root system
    /// (given as ids of positive roots). Fails with [`Error::NotClosed`] when
    /// `pos ∪ −pos` is not stable under its own reflections.
    pub fn simple_system(&self, pos: &[RootId]) -> Result<Vec<RootId>> {
        let mut members = vec![false; self.roots.len()];
        for &p in pos {
            if !self.is_positive(p) {
                return Err(Error::NotClosed);
            }
            members[p] = true;
            members[self.negate(p)] = true;
        }
        for &g in pos {
            for (r, &m) in members.iter().enumerate() {
                if m {
                    let img = self.reflect_by(&self.roots[r], g);
                    if !members[self.index[&img]] {
                        return Err(Error::NotClosed);
                    }
                }
            }
        }
        let mut out: Vec<RootId> = pos
            .iter()
            .copied()
            .filter(|&a| {
                !pos.iter().any(|&b| {
                    b != a
                        && self
                            .root_id(&(&self.roots[a] - &self.roots[b]))
                            .is_some_and(|d| self.is_positive(d) && members[d])
                })
            })
            .collect();
        out.sort_unstable();
        out.dedup();
        Ok(out)
    }
}

/// Builds the full root system for a Dynkin type.
pub fn build_root_system(dynkin: DynkinType) -> RootSystem {
    RootSystem::new(dynkin)
}
