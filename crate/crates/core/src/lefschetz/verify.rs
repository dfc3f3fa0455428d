use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use super::quotient::QuotientAlgebra;
use super::rank::{rank, rank_mod_p, Matrix, FAST_PRIME};
use super::witness::{
    has_coefficient_spread, syzygy_witness_even, syzygy_witness_odd, verify_witness,
    GenericLinearForm, SyzygyWitness, WitnessVariant,
};
use crate::closed_form::closed_form_basis;
use crate::error::{invalid, Result};
use crate::poly::{rat, Polynomial, Rational, TermOrder};

/// Whether `R/I_{n,k}` has the WLP: `2k >= n-3` for odd `n`, `2k >= n` for even `n`.
pub fn classify_wlp(n: usize, k: usize) -> Result<bool> {
    if n < 2 || k < 2 {
        return Err(invalid(format!(
            "WLP classification needs n, k >= 2, got n = {n}, k = {k}"
        )));
    }
    Ok(if n % 2 == 1 {
        2 * k + 3 >= n
    } else {
        2 * k >= n
    })
}

/// Which algebra the rank computations run on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum RankAlgebra {
    /// `R/in(I)` with `ℓ = Σx` first, falling back to random forms on `R/I`.
    Initial,
    /// `R/I` with random forms only.
    Original,
}

#[derive(Clone, Debug)]
pub struct WlpOptions {
    pub trials: usize,
    pub seed: u64,
    pub algebra: RankAlgebra,
    pub want_witness: bool,
}

impl Default for WlpOptions {
    fn default() -> Self {
        WlpOptions {
            trials: 3,
            seed: 0,
            algebra: RankAlgebra::Initial,
            want_witness: true,
        }
    }
}

/// How a rank value was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Certificate {
    /// Full rank for `ℓ = Σx` on the initial-ideal algebra; semicontinuity
    /// makes this a certificate for a general form on `R/I`.
    InitialSum,
    /// Full rank for a specific random form on `R/I`.
    RandomTrial,
    /// Maximal rank never reached; the value is the best lower bound seen.
    LowerBound,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MapReport {
    pub from: usize,
    pub to: usize,
    pub rank: usize,
    pub required: usize,
    pub certificate: Certificate,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FailingMap {
    pub from: usize,
    pub to: usize,
    pub rank: usize,
    pub required: usize,
}

/// A kernel element of `·ℓ^k` on `A = R/I_{n-1,2}` derived from a syzygy.
#[derive(Clone, Debug)]
pub struct KernelWitness {
    pub witness: SyzygyWitness,
    /// `ℓ^e * seed` for the exponent that lands in the failing degree.
    pub element: Polynomial,
    pub degree: usize,
    pub identity_holds: bool,
    pub nonzero_in_quotient: bool,
    pub killed_by_power: bool,
}

impl KernelWitness {
    pub fn verified(&self) -> bool {
        self.identity_holds && self.nonzero_in_quotient && self.killed_by_power
    }
}

#[derive(Clone, Debug)]
pub struct WlpVerdict {
    pub n: usize,
    pub k: usize,
    pub holds: bool,
    pub classified: bool,
    /// Classification says WLP but a map never reached maximal rank.
    pub inconclusive: bool,
    pub maps: Vec<MapReport>,
    pub failing: Vec<FailingMap>,
    pub witness: Option<KernelWitness>,
    pub trials: usize,
    pub seed: u64,
}

impl WlpVerdict {
    pub fn agrees(&self) -> bool {
        self.holds == self.classified
    }
}

/// Seed for trial `t` of map `from` under a run seed.
fn trial_seed(seed: u64, from: usize, t: usize) -> u64 {
    seed.wrapping_mul(0x9E37_79B9_7F4A_7C15) ^ ((from as u64) << 32) ^ t as u64
}

/// Best rank of `·ℓ^power : A_from -> A_{from+power}` over random forms.
/// Trials stop early once one reaches full rank; the modular rank only
/// decides whether to stop, the reported rank is always exact.
pub fn generic_rank(
    algebra: &QuotientAlgebra,
    power: usize,
    from: usize,
    trials: usize,
    seed: u64,
) -> (usize, bool) {
    let full = algebra.dim(from).min(algebra.dim(from + power));
    let run = |t: usize| {
        let a = GenericLinearForm::random(
            algebra.nvars(),
            &mut ChaCha8Rng::seed_from_u64(trial_seed(seed, from, t)),
        );
        let m = algebra.multiplication_matrix(a.coeffs(), power, from);
        let fast_full = rank_mod_p(&m, FAST_PRIME) == Some(full);
        (rank(&m), fast_full)
    };
    let mut best = 0;
    for t in 0..trials.max(1) {
        let (r, fast_full) = run(t);
        best = best.max(r);
        if fast_full || best == full {
            break;
        }
    }
    (best, best == full)
}

/// The algebra `A = R/I_{m,2}` in `m = n-1` variables whose `·ℓ^k` maps
/// decide the WLP for `R/I_{n,k}`.
pub fn switched_algebra(n: usize) -> Result<QuotientAlgebra> {
    let m = n - 1;
    let order = TermOrder::degrevlex(m);
    QuotientAlgebra::from_basis(&closed_form_basis(m, 2, &order)?)
}

pub fn switched_initial_algebra(n: usize) -> Result<QuotientAlgebra> {
    let m = n - 1;
    let order = TermOrder::degrevlex(m);
    let ideal = closed_form_basis(m, 2, &order)?.initial_ideal();
    QuotientAlgebra::monomial(&ideal, &order)
}

/// Checks the WLP of `R/I_{n,k}` through the maps `·ℓ^k : A_i -> A_{i+k}` on
/// `A = R/I_{n-1,2}`, for every `i` whose target is nonzero.
pub fn verify_wlp(n: usize, k: usize, opts: &WlpOptions) -> Result<WlpVerdict> {
    let classified = classify_wlp(n, k)?;
    let original = switched_algebra(n)?;
    let initial = match opts.algebra {
        RankAlgebra::Initial => Some(switched_initial_algebra(n)?),
        RankAlgebra::Original => None,
    };
    let socle = original.socle_degree();
    let sources: Vec<usize> = if k <= socle {
        (0..=socle - k).collect()
    } else {
        Vec::new()
    };
    let ones = vec![rat(1); n - 1];

    let maps: Vec<MapReport> = sources
        .par_iter()
        .map(|&i| {
            let required = original.dim(i).min(original.dim(i + k));
            if let Some(init) = &initial {
                let r = rank(&init.multiplication_matrix(&ones, k, i));
                if r == required {
                    return MapReport {
                        from: i,
                        to: i + k,
                        rank: r,
                        required,
                        certificate: Certificate::InitialSum,
                    };
                }
            }
            let (r, full) = generic_rank(&original, k, i, opts.trials, opts.seed);
            let certificate = if full {
                Certificate::RandomTrial
            } else {
                Certificate::LowerBound
            };
            MapReport {
                from: i,
                to: i + k,
                rank: r,
                required,
                certificate,
            }
        })
        .collect();

    let failing: Vec<FailingMap> = maps
        .iter()
        .filter(|m| m.rank < m.required)
        .map(|m| FailingMap {
            from: m.from,
            to: m.to,
            rank: m.rank,
            required: m.required,
        })
        .collect();
    let holds = failing.is_empty();
    let witness = if !holds && opts.want_witness {
        kernel_witness(n, k, opts.seed, &original)?
    } else {
        None
    };
    Ok(WlpVerdict {
        n,
        k,
        holds,
        classified,
        inconclusive: classified && !holds,
        maps,
        failing,
        witness,
        trials: opts.trials,
        seed: opts.seed,
    })
}

/// Syzygy-derived kernel element of `·ℓ^k` on `R/I_{n-1,2}` where the theory
/// predicts one: `n = 2p+2, k <= p` (odd witness, `v = ℓ^(p-k) ℓ'`) and
/// `n = 2p+1, k <= p-2` (even witness, `v = ℓ^(p-2-k) f`).
pub fn kernel_witness(
    n: usize,
    k: usize,
    seed: u64,
    algebra: &QuotientAlgebra,
) -> Result<Option<KernelWitness>> {
    let m = n - 1;
    let (witness, e) = if n % 2 == 0 {
        let p = (n - 2) / 2;
        if k > p || p < 1 {
            return Ok(None);
        }
        (
            syzygy_witness_odd(&GenericLinearForm::seeded(m, seed))?,
            p - k,
        )
    } else {
        let p = (n - 1) / 2;
        if p < 3 || k + 2 > p {
            return Ok(None);
        }
        (
            syzygy_witness_even(&GenericLinearForm::seeded(m, seed))?,
            p - 2 - k,
        )
    };
    let order = algebra.order().clone();
    let l = witness.a.polynomial(&order);
    let seed_form = witness.kernel_seed().with_order(&order);
    let element = &l.pow(e as u32) * &seed_form;
    let degree = e + seed_form.degree()? as usize;
    let identity_holds = verify_witness(&witness)
        && (witness.variant == WitnessVariant::Odd || has_coefficient_spread(&seed_form));
    let nonzero_in_quotient = !algebra.normal_form(&element).is_zero();
    let killed_by_power = algebra
        .normal_form(&(&l.pow(k as u32) * &element))
        .is_zero();
    Ok(Some(KernelWitness {
        witness,
        element,
        degree,
        identity_holds,
        nonzero_in_quotient,
        killed_by_power,
    }))
}

/// Hilbert function of `A/(ℓ^k)` for a random `ℓ` on `A = R/I_{n-1,2}`:
/// `dim A_j - rank(·ℓ^k : A_{j-k} -> A_j)`. Random trials only bound the
/// generic rank from below, so this is a surrogate, not a certificate.
pub fn quotient_by_power_hilbert(n: usize, k: usize, seed: u64) -> Result<Vec<usize>> {
    let a = switched_algebra(n)?;
    let form = GenericLinearForm::seeded(n - 1, seed);
    Ok((0..=a.socle_degree())
        .map(|j| {
            if j < k {
                a.dim(j)
            } else {
                a.dim(j) - rank(&a.multiplication_matrix(form.coeffs(), k, j - k))
            }
        })
        .collect())
}

/// Direct check of the WLP of `R/I_{n,k}` itself: `·ℓ : A_i -> A_{i+1}` for
/// every `i`, with `ℓ = Σx` on the initial algebra first and random forms on
/// `R/I_{n,k}` otherwise.
pub fn direct_wlp(n: usize, k: usize, trials: usize, seed: u64) -> Result<(bool, Vec<FailingMap>)> {
    let order = TermOrder::degrevlex(n);
    let g = closed_form_basis(n, k, &order)?;
    let original = QuotientAlgebra::from_basis(&g)?;
    let initial = QuotientAlgebra::monomial(&g.initial_ideal(), &order)?;
    let ones = vec![rat(1); n];
    let mut failing = Vec::new();
    for i in 0..original.socle_degree() {
        let required = original.dim(i).min(original.dim(i + 1));
        if rank(&initial.multiplication_matrix(&ones, 1, i)) == required {
            continue;
        }
        let (r, full) = generic_rank(&original, 1, i, trials, seed);
        if !full {
            failing.push(FailingMap {
                from: i,
                to: i + 1,
                rank: r,
                required,
            });
        }
    }
    Ok((failing.is_empty(), failing))
}

/// Rank of `·ℓ^power : A_from -> A_{from+power}` for explicit coefficients.
pub fn map_rank(
    algebra: &QuotientAlgebra,
    coeffs: &[Rational],
    power: usize,
    from: usize,
) -> (usize, Matrix) {
    let m = algebra.multiplication_matrix(coeffs, power, from);
    (rank(&m), m)
}
