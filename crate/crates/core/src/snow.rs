//! Ampleness of the normal bundle via the maximal length over W₀.
//!
//! For the `K`-homogeneous bundle with neutral fiber `E₀` over `K/P`,
//!
//! ```text
//! a(E) = max{ ℓ(ω) : ω ∈ W₀ } − (dim P − dim B),
//! W₀   = { ω ∈ W_K : Λ((E₀*)^U) ∩ ω Λ(E₀*) ≠ ∅ }.
//! ```
//!
//! Here `B` is the negative Borel of `K` with unipotent radical `U`. Since
//! `E₀` is multiplicity free and brackets of root vectors are nonzero
//! whenever the sum is a root, `(E₀*)^U = (E₀/𝔲E₀)*` has weights
//! `−Λ_max(E₀)`, the fiber weights that stay maximal under adding positive
//! compact roots. With `Λ(E₀*) = −Λ(E₀)` the membership test becomes
//! `∃ μ ∈ Λ_max(E₀) : ω⁻¹(μ) ∈ Λ(E₀)`.
//!
//! Two routes compute the maximum: a scan of the whole group, and a search
//! that for every pair `(μ, ν)` jumps straight to the longest `ω` with
//! `ω(ν) = μ`.

use crate::cycle::{NeutralFiber, ParabolicData};
use crate::error::{Error, Result};
use crate::par::Parallelism;
use crate::realform::HermitianData;
use crate::rootsys::{ReflectionGroup, RootId, RootSystem, WeylElement, DEFAULT_WEYL_CAP};

/// Inputs to the ampleness computation for one flag domain.
#[derive(Debug, Clone)]
pub struct AmplenessInput<'a> {
    pub rs: &'a RootSystem,
    /// Simple system of Δ⁺(𝔨).
    pub k_simples: Vec<RootId>,
    pub fiber: NeutralFiber,
    /// `dim P − dim B`.
    pub levi_correction: usize,
    pub dim_c: usize,
}

impl AmplenessInput<'_> {
    pub fn group(&self) -> ReflectionGroup<'_> {
        ReflectionGroup::new(self.rs, self.k_simples.clone())
    }
}

/// `{α ∈ Λ(E₀) : α + γ ∉ Λ(E₀) for all γ ∈ Δ⁺(𝔨)}`.
pub fn lambda_max(rs: &RootSystem, fiber: &NeutralFiber, k_positives: &[RootId]) -> Vec<RootId> {
    fiber
        .weights
        .iter()
        .copied()
        .filter(|&a| {
            k_positives
                .iter()
                .all(|&g| rs.sum_root(a, g).is_none_or(|s| !fiber.contains(s)))
        })
        .collect()
}

/// Λ_max(E₀) read off from the structure of 𝔰: `{λ_𝔰}` when 𝔰 is
/// irreducible, otherwise those of `λ₊`, `λ₋` whose summand `𝔰±` is not
/// contained in 𝔮.
pub fn lambda_max_closed_form(hermitian: &HermitianData, pd: &ParabolicData) -> Vec<RootId> {
    if !hermitian.is_hermitian() {
        return hermitian.lambda_max_s.clone();
    }
    let inside_q = |part: &[RootId]| part.iter().all(|r| pd.q_roots.binary_search(r).is_ok());
    let mut out = Vec::new();
    if let Some(l) = hermitian.lambda_plus() {
        if !inside_q(&hermitian.s_plus) {
            out.push(l);
        }
    }
    if let Some(l) = hermitian.lambda_minus() {
        if !inside_q(&hermitian.s_minus) {
            out.push(l);
        }
    }
    out.sort_unstable();
    out
}

/// A longest element of W₀ with the pair of weights that puts it there.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct W0Max {
    pub length: usize,
    pub witness: WeylElement,
    /// `μ ∈ Λ_max(E₀)` with `witness⁻¹(μ) = ν`.
    pub mu: RootId,
    /// `ν ∈ Λ(E₀)`.
    pub nu: RootId,
}

fn in_w0(w: &WeylElement, fiber: &NeutralFiber, lmax: &[RootId]) -> bool {
    fiber.weights.iter().any(|&nu| lmax.contains(&w.apply(nu)))
}

fn witness_pair(w: &WeylElement, fiber: &NeutralFiber, lmax: &[RootId]) -> (RootId, RootId) {
    let inv = w.inverse_action();
    lmax.iter()
        .find_map(|&mu| {
            let nu = inv[mu] as RootId;
            fiber.contains(nu).then_some((mu, nu))
        })
        .expect("witness lies in W0")
}

fn lambda_max_of(input: &AmplenessInput<'_>, group: &ReflectionGroup<'_>) -> Vec<RootId> {
    lambda_max(input.rs, &input.fiber, group.positives())
}

/// Scans all of `W_K`. Ties among longest elements go to the
/// lexicographically least reduced word.
pub fn w0_max_length_bruteforce(
    input: &AmplenessInput<'_>,
    cap: usize,
    par: Parallelism,
) -> Result<W0Max> {
    let group = input.group();
    let lmax = lambda_max_of(input, &group);
    let mut best: Option<(usize, WeylElement)> = None;
    group.for_each_level(cap, par, |len, level| {
        if let Some(i) = par.position_first(level, |w| in_w0(w, &input.fiber, &lmax)) {
            best = Some((len, level[i].clone()));
        }
    })?;
    let (length, witness) = best.expect("identity is in W0");
    let (mu, nu) = witness_pair(&witness, &input.fiber, &lmax);
    Ok(W0Max {
        length,
        witness,
        mu,
        nu,
    })
}

/// Maximizes over pairs `(μ, ν)` the length of the longest `ω` with
/// `ω(ν) = μ`; never enumerates the group.
pub fn w0_max_length_fast(input: &AmplenessInput<'_>) -> W0Max {
    let group = input.group();
    let lmax = lambda_max_of(input, &group);
    let mut best: Option<(usize, WeylElement)> = None;
    for &mu in &lmax {
        for &nu in &input.fiber.weights {
            let Some((w, len)) = group.longest_mapping(mu, nu) else {
                continue;
            };
            let better = match &best {
                None => true,
                Some((bl, bw)) => len > *bl || (len == *bl && w.word() < bw.word()),
            };
            if better {
                best = Some((len, w));
            }
        }
    }
    let (length, witness) = best.expect("Λ_max(E₀) ⊆ Λ(E₀), so the identity qualifies");
    let (mu, nu) = witness_pair(&witness, &input.fiber, &lmax);
    W0Max {
        length,
        witness,
        mu,
        nu,
    }
}

/// Maximal length over the minimal coset representatives in `W₀ ∩ W^P`,
/// i.e. the ampleness on `K/P` without the pull-back correction. `W₀` is
/// stable under right multiplication by `W_P`, so this equals
/// `max_w0_length − levi_correction`.
pub fn ampleness_by_min_coset_reps(
    input: &AmplenessInput<'_>,
    compact_levi_positives: &[RootId],
    cap: usize,
) -> Result<usize> {
    let group = input.group();
    let lmax = lambda_max_of(input, &group);
    let mut best = 0;
    for (w, len) in group.enumerate(cap)? {
        let minimal = compact_levi_positives
            .iter()
            .all(|&b| input.rs.is_positive(w.apply(b)));
        if minimal && in_w0(&w, &input.fiber, &lmax) {
            best = best.max(len);
        }
    }
    Ok(best)
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub enum Method {
    #[default]
    Auto,
    BruteForce,
    Fast,
}

#[derive(Debug, Clone, Copy)]
pub struct AmplenessOptions {
    pub method: Method,
    /// Run both routes and require agreement (brute force only when the
    /// group is under `cap`, unless it is the selected method).
    pub verify: bool,
    pub cap: usize,
    pub parallelism: Parallelism,
}

impl Default for AmplenessOptions {
    fn default() -> Self {
        AmplenessOptions {
            method: Method::Auto,
            verify: false,
            cap: DEFAULT_WEYL_CAP,
            parallelism: Parallelism::default(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AmplenessResult {
    pub ampleness: usize,
    pub max_w0_length: usize,
    pub witness: WeylElement,
    pub mu: RootId,
    pub nu: RootId,
    pub lambda_max: Vec<RootId>,
}

pub fn ampleness(input: &AmplenessInput<'_>, opts: &AmplenessOptions) -> Result<AmplenessResult> {
    let group = input.group();
    let lmax = lambda_max_of(input, &group);
    let under_cap = group.classical_order() <= opts.cap as u128;
    let best = match opts.method {
        Method::Auto | Method::Fast => {
            let fast = w0_max_length_fast(input);
            if opts.verify && under_cap {
                let brute = w0_max_length_bruteforce(input, opts.cap, opts.parallelism)?;
                cross_check(&fast, &brute)?;
            }
            fast
        }
        Method::BruteForce => {
            let brute = w0_max_length_bruteforce(input, opts.cap, opts.parallelism)?;
            if opts.verify {
                cross_check(&w0_max_length_fast(input), &brute)?;
            }
            brute
        }
    };
    let a = best.length as i64 - input.levi_correction as i64;
    if a < 0 || a > input.dim_c as i64 {
        return Err(Error::InternalInconsistency(format!(
            "ampleness {a} outside [0, {}]",
            input.dim_c
        )));
    }
    Ok(AmplenessResult {
        ampleness: a as usize,
        max_w0_length: best.length,
        witness: best.witness,
        mu: best.mu,
        nu: best.nu,
        lambda_max: lmax,
    })
}

fn cross_check(fast: &W0Max, brute: &W0Max) -> Result<()> {
    if fast.length != brute.length || fast.witness.word() != brute.witness.word() {
        return Err(Error::InternalInconsistency(format!(
            "W0 search disagrees with scan: length {} word {:?} vs length {} word {:?}",
            fast.length,
            fast.witness.word(),
            brute.length,
            brute.witness.word()
        )));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cycle::{neutral_fiber, parabolic_data};
    use crate::realform::{grade_roots, hermitian_data};
    use crate::rootsys::Weight;

    struct Case {
        rs: RootSystem,
        marked: Vec<usize>,
        levi: Vec<usize>,
    }

    impl Case {
        fn new(t: &str, marked: &[usize], levi: &[usize]) -> Self {
            Case {
                rs: RootSystem::new(t.parse().unwrap()),
                marked: marked.to_vec(),
                levi: levi.to_vec(),
            }
        }

        fn input(&self) -> AmplenessInput<'_> {
            let g = grade_roots(&self.rs, &self.marked).unwrap();
            let h = hermitian_data(&self.rs, &g).unwrap();
            let pd = parabolic_data(&self.rs, &g, &self.levi).unwrap();
            AmplenessInput {
                rs: &self.rs,
                k_simples: h.k_simples,
                fiber: neutral_fiber(&pd, &g).unwrap(),
                levi_correction: pd.levi_correction,
                dim_c: pd.dim_c,
            }
        }

        fn id(&self, c: &[i32]) -> RootId {
            self.rs.root_id(&Weight(c.to_vec())).unwrap()
        }
    }

    #[test]
    fn lambda_max_examples() {
        let c = Case::new("A2", &[0], &[1]);
        let inp = c.input();
        let kpos = inp.group().positives().to_vec();
        assert_eq!(lambda_max(&c.rs, &inp.fiber, &kpos), vec![c.id(&[1, 1])]);

        let c = Case::new("A2", &[0], &[0]);
        let inp = c.input();
        assert_eq!(inp.fiber.weights, vec![c.id(&[1, 1])]);
        let kpos = inp.group().positives().to_vec();
        assert_eq!(lambda_max(&c.rs, &inp.fiber, &kpos), inp.fiber.weights);

        let c = Case::new("B2", &[1], &[0]);
        let inp = c.input();
        let kpos = inp.group().positives().to_vec();
        assert_eq!(lambda_max(&c.rs, &inp.fiber, &kpos), vec![c.id(&[1, 1])]);
    }

    #[test]
    fn worked_maxima() {
        let expect = [
            ("A2", vec![0], vec![1], 1, 0),
            ("A2", vec![0], vec![0], 0, 0),
            ("B2", vec![1], vec![0], 1, 0),
            ("A2", vec![0], vec![], 1, 1),
        ];
        for (t, m, l, len, a) in expect {
            let c = Case::new(t, &m, &l);
            let inp = c.input();
            let brute =
                w0_max_length_bruteforce(&inp, DEFAULT_WEYL_CAP, Parallelism::Serial).unwrap();
            let fast = w0_max_length_fast(&inp);
            assert_eq!(brute, fast, "{t} {m:?} {l:?}");
            assert_eq!(brute.length, len, "{t} {m:?} {l:?}");
            let opts = AmplenessOptions {
                verify: true,
                ..Default::default()
            };
            assert_eq!(ampleness(&inp, &opts).unwrap().ampleness, a);
        }
    }

    #[test]
    fn witnesses() {
        // A2 marked {1}, levi {2}: s_{α2} sends α1 to α1+α2
        let c = Case::new("A2", &[0], &[1]);
        let w = w0_max_length_fast(&c.input());
        assert_eq!(w.witness.word(), &[0]);
        assert_eq!((w.mu, w.nu), (c.id(&[1, 1]), c.id(&[1, 0])));

        // A2 marked {1}, levi {1}: only the identity
        let c = Case::new("A2", &[0], &[0]);
        let w = w0_max_length_bruteforce(&c.input(), 10, Parallelism::Serial).unwrap();
        assert!(w.witness.word().is_empty());
    }

    #[test]
    fn trivial_k() {
        // A1: no compact roots, W_K trivial
        let c = Case::new("A1", &[0], &[]);
        let inp = c.input();
        assert!(inp.k_simples.is_empty());
        assert_eq!(w0_max_length_fast(&inp).length, 0);
        assert_eq!(
            ampleness(&inp, &AmplenessOptions::default())
                .unwrap()
                .ampleness,
            0
        );
    }

    #[test]
    fn bruteforce_cap_overflow() {
        let c = Case::new("B2", &[1], &[0]);
        let opts = AmplenessOptions {
            method: Method::BruteForce,
            cap: 3,
            ..Default::default()
        };
        assert_eq!(
            ampleness(&c.input(), &opts).unwrap_err(),
            Error::Overflow { cap: 3 }
        );
        // fast path does not care about the cap
        let opts = AmplenessOptions {
            method: Method::Fast,
            verify: true,
            cap: 3,
            ..Default::default()
        };
        assert_eq!(ampleness(&c.input(), &opts).unwrap().ampleness, 0);
    }

    #[test]
    fn pullback_correction_matches_coset_route() {
        for (t, m, l) in [
            ("A2", vec![0], vec![1]),
            ("B2", vec![1], vec![0]),
            ("C3", vec![2], vec![0, 1]),
            ("B3", vec![0], vec![1, 2]),
            ("G2", vec![1], vec![0]),
        ] {
            let c = Case::new(t, &m, &l);
            let inp = c.input();
            let g = grade_roots(&c.rs, &m).unwrap();
            let pd = parabolic_data(&c.rs, &g, &l).unwrap();
            let levi_k = pd.compact_levi_positives(&c.rs, &g);
            let direct = ampleness_by_min_coset_reps(&inp, &levi_k, DEFAULT_WEYL_CAP).unwrap();
            let a = ampleness(&inp, &AmplenessOptions::default()).unwrap();
            assert_eq!(direct, a.ampleness, "{t} {m:?} {l:?}");
        }
    }
}
