//! Finite reflection groups generated by a simple system inside a root
//! system, acting by permutations of the ambient roots.

use std::collections::{HashMap, HashSet, VecDeque};

use super::{RootId, RootSystem, SubsystemType};
use crate::error::{Error, Result};
use crate::par::Parallelism;

/// Default cap on the number of group elements a brute-force scan may visit.
pub const DEFAULT_WEYL_CAP: usize = 10_000_000;

/// An element of a reflection group.
///
/// `word` lists simple-reflection indices of the generating subsystem
/// (`ω = s_{w[0]} s_{w[1]} ⋯`); `action` is the induced permutation of the
/// ambient root ids. Equality is decided by the action alone.
#[derive(Debug, Clone)]
pub struct WeylElement {
    word: Vec<u8>,
    action: Vec<u16>,
}

impl WeylElement {
    pub fn word(&self) -> &[u8] {
        &self.word
    }

    pub fn action(&self) -> &[u16] {
        &self.action
    }

    /// Image of a root under this element.
    pub fn apply(&self, root: RootId) -> RootId {
        self.action[root] as RootId
    }

    pub fn inverse_action(&self) -> Vec<u16> {
        let mut inv = vec![0u16; self.action.len()];
        for (i, &j) in self.action.iter().enumerate() {
            inv[j as usize] = i as u16;
        }
        inv
    }
}

impl PartialEq for WeylElement {
    fn eq(&self, other: &Self) -> bool {
        self.action == other.action
    }
}

impl Eq for WeylElement {}

impl std::hash::Hash for WeylElement {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.action.hash(state);
    }
}

/// The reflection group generated by a simple system of a subsystem.
#[derive(Debug, Clone)]
pub struct ReflectionGroup<'a> {
    rs: &'a RootSystem,
    simples: Vec<RootId>,
    positives: Vec<RootId>,
    generators: Vec<Vec<u16>>,
}

impl<'a> ReflectionGroup<'a> {
    /// `simples` must be the simple system of a positive subsystem of the
    /// ambient positive roots, as returned by [`RootSystem::simple_system`].
    pub fn new(rs: &'a RootSystem, simples: Vec<RootId>) -> Self {
        assert!(simples.len() < 256, "word letters are stored as u8");
        let generators: Vec<Vec<u16>> = simples
            .iter()
            .map(|&s| rs.reflection_permutation(s))
            .collect();
        // subsystem roots: orbit of the simple roots
        let mut member = vec![false; rs.roots().len()];
        let mut queue: VecDeque<RootId> = simples.iter().copied().collect();
        for &s in &simples {
            member[s] = true;
        }
        while let Some(r) = queue.pop_front() {
            for g in &generators {
                let img = g[r] as usize;
                if !member[img] {
                    member[img] = true;
                    queue.push_back(img);
                }
            }
        }
        let positives = (0..rs.num_positive()).filter(|&r| member[r]).collect();
        ReflectionGroup {
            rs,
            simples,
            positives,
            generators,
        }
    }

    pub fn root_system(&self) -> &'a RootSystem {
        self.rs
    }

    pub fn simples(&self) -> &[RootId] {
        &self.simples
    }

    /// Positive roots of the subsystem.
    pub fn positives(&self) -> &[RootId] {
        &self.positives
    }

    pub fn rank(&self) -> usize {
        self.simples.len()
    }

    pub fn subsystem_type(&self) -> SubsystemType {
        SubsystemType::of_simple_system(self.rs, &self.simples)
    }

    /// Order predicted from the Dynkin type of the subsystem.
    pub fn classical_order(&self) -> u128 {
        self.subsystem_type().weyl_order()
    }

    pub fn identity(&self) -> WeylElement {
        WeylElement {
            word: Vec::new(),
            action: (0..self.rs.roots().len() as u16).collect(),
        }
    }

    /// `ω · s_i`.
    pub fn mul_simple(&self, w: &WeylElement, i: usize) -> WeylElement {
        let g = &self.generators[i];
        let mut word = w.word.clone();
        word.push(i as u8);
        WeylElement {
            word,
            action: g.iter().map(|&r| w.action[r as usize]).collect(),
        }
    }

    /// `s_i · ω`, with the word left untouched.
    fn simple_mul_action(&self, i: usize, action: &[u16]) -> Vec<u16> {
        let g = &self.generators[i];
        action.iter().map(|&r| g[r as usize]).collect()
    }

    /// Right multiplication by the reflection in an arbitrary root, on the
    /// action only.
    fn mul_reflection_action(&self, action: &[u16], refl: &[u16]) -> Vec<u16> {
        refl.iter().map(|&r| action[r as usize]).collect()
    }

    /// Length as the number of subsystem positive roots sent negative.
    pub fn length(&self, w: &WeylElement) -> usize {
        self.inversions(&w.action)
    }

    fn inversions(&self, action: &[u16]) -> usize {
        self.positives
            .iter()
            .filter(|&&p| !self.rs.is_positive(action[p] as usize))
            .count()
    }

    /// Builds an element from its action, attaching the lexicographically
    /// least reduced word (smallest left descent first).
    pub fn element_from_action(&self, action: Vec<u16>) -> WeylElement {
        let mut word = Vec::new();
        let mut cur = action.clone();
        loop {
            // left descents of cur: s_i with cur⁻¹(α_i) < 0
            let inv = inverse(&cur);
            let Some(i) = self
                .simples
                .iter()
                .position(|&s| !self.rs.is_positive(inv[s] as usize))
            else {
                break;
            };
            word.push(i as u8);
            cur = self.simple_mul_action(i, &cur);
        }
        WeylElement { word, action }
    }

    /// All elements, breadth-first by length with ties in lexicographic
    /// order of their least reduced words.
    pub fn enumerate(&self, cap: usize) -> Result<Vec<(WeylElement, usize)>> {
        let mut out = Vec::new();
        self.for_each_level(cap, Parallelism::Serial, |len, level| {
            out.extend(level.iter().cloned().map(|w| (w, len)));
        })?;
        Ok(out)
    }

    /// Visits the group one length level at a time. Each level is sorted
    /// lexicographically by least reduced word. Fails with
    /// [`Error::Overflow`] once more than `cap` elements have been produced.
    pub fn for_each_level<F>(&self, cap: usize, par: Parallelism, mut visit: F) -> Result<usize>
    where
        F: FnMut(usize, &[WeylElement]),
    {
        let mut level = vec![self.identity()];
        let mut total = 0usize;
        let mut len = 0usize;
        while !level.is_empty() {
            total += level.len();
            if total > cap {
                return Err(Error::Overflow { cap });
            }
            visit(len, &level);
            // successors w·s_i with w(α_i) > 0, in (w, i) order
            let succ: Vec<Vec<WeylElement>> = par.map(&level, |w| {
                (0..self.simples.len())
                    .filter(|&i| self.rs.is_positive(w.apply(self.simples[i])))
                    .map(|i| self.mul_simple(w, i))
                    .collect()
            });
            let mut seen: HashSet<Vec<u16>> = HashSet::new();
            let mut next = Vec::new();
            for w in succ.into_iter().flatten() {
                if !seen.contains(&w.action) {
                    seen.insert(w.action.clone());
                    next.push(w);
                }
            }
            level = next;
            len += 1;
        }
        Ok(total)
    }

    /// Some `ω` with `ω(from) = to`, found by breadth-first search of the
    /// orbit of `from`; `None` when `to` is not in that orbit.
    pub fn find_mapping(&self, from: RootId, to: RootId) -> Option<Vec<u16>> {
        let mut paths: HashMap<RootId, Vec<u16>> = HashMap::new();
        let id: Vec<u16> = (0..self.rs.roots().len() as u16).collect();
        paths.insert(from, id);
        let mut queue = VecDeque::from([from]);
        while let Some(r) = queue.pop_front() {
            if r == to {
                return paths.remove(&r);
            }
            for i in 0..self.simples.len() {
                let img = self.generators[i][r] as RootId;
                if !paths.contains_key(&img) {
                    let a = self.simple_mul_action(i, &paths[&r]);
                    paths.insert(img, a);
                    queue.push_back(img);
                }
            }
        }
        None
    }

    /// The unique longest `ω` with `ω(nu) = mu`, and its length.
    ///
    /// All solutions form the coset `ω₁·Stab(ν)`, and `Stab(ν)` is the
    /// reflection subgroup on the roots orthogonal to `ν`. Starting from any
    /// solution, right-multiplying by a stabilizer simple reflection `s_β`
    /// with `ω(β) > 0` strictly raises the length; the walk stops exactly at
    /// the element sending every positive root of the stabilizer negative,
    /// which is the coset's longest element.
    pub fn longest_mapping(&self, mu: RootId, nu: RootId) -> Option<(WeylElement, usize)> {
        let mut action = self.find_mapping(nu, mu)?;
        let nu_w = self.rs.root(nu);
        let stab_pos: Vec<RootId> = self
            .positives
            .iter()
            .copied()
            .filter(|&g| self.rs.pairing(self.rs.root(g), nu_w) == 0)
            .collect();
        let stab_simples = self
            .rs
            .simple_system(&stab_pos)
            .expect("stabilizer of a vector is a reflection subgroup");
        let refls: Vec<Vec<u16>> = stab_simples
            .iter()
            .map(|&b| self.rs.reflection_permutation(b))
            .collect();
        loop {
            let step = stab_simples
                .iter()
                .position(|&b| self.rs.is_positive(action[b] as usize));
            match step {
                Some(k) => action = self.mul_reflection_action(&action, &refls[k]),
                None => break,
            }
        }
        let len = self.inversions(&action);
        Some((self.element_from_action(action), len))
    }

    /// `max{ℓ(ω) : ω(ν) = μ}`, or `None` if `μ` is not in the orbit of `ν`.
    pub fn max_length_mapping(&self, mu: RootId, nu: RootId) -> Option<usize> {
        self.longest_mapping(mu, nu).map(|(_, l)| l)
    }

    /// Same quantity by scanning the whole group.
    pub fn max_length_mapping_bruteforce(
        &self,
        mu: RootId,
        nu: RootId,
        cap: usize,
    ) -> Result<Option<usize>> {
        Ok(self
            .enumerate(cap)?
            .into_iter()
            .filter(|(w, _)| w.apply(nu) == mu)
            .map(|(_, l)| l)
            .max())
    }
}

fn inverse(action: &[u16]) -> Vec<u16> {
    let mut inv = vec![0u16; action.len()];
    for (i, &j) in action.iter().enumerate() {
        inv[j as usize] = i as u16;
    }
    inv
}
