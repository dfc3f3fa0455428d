use std::fmt::Write as _;

use num_bigint::BigUint;
use num_traits::ToPrimitive;
use serde_json::{json, Value};

use super::{AlgebraChoice, BettiMethod, CountWhat, Outcome, RunConfig};
use crate::closed_form::{closed_form_basis, count_distinct_bases, ideal_generators};
use crate::error::{invalid, Result};
use crate::groebner::{buchberger, GroebnerBasis, MonomialIdeal};
use crate::lattice::{
    count_generators_by_degree, count_standard_monomials, hilbert_series, LatticePath, Step,
};
use crate::lefschetz::{verify_wlp, KernelWitness, RankAlgebra, WlpOptions, WlpVerdict};
use crate::poly::{Monomial, OrderFamily, Polynomial, PolynomialJson, Rational, TermOrder};
use crate::resolution::{
    betti_from_mvt, betti_ghp, betti_murai, build_mvt, initial_ideal, BettiTable,
};

pub(super) fn big_json(v: &BigUint) -> Value {
    match v.to_u64() {
        Some(x) => json!(x),
        None => json!(v.to_string()),
    }
}

fn rational_json(v: &[Rational]) -> Value {
    json!(v.iter().map(|c| c.to_string()).collect::<Vec<_>>())
}

fn poly_json(p: &Polynomial) -> Value {
    json!({ "text": p.to_string(), "terms": PolynomialJson::from(p).terms })
}

fn sigma_text(sigma: &[usize]) -> String {
    sigma
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}

/// Macaulay2 ring declaration with variables listed largest first.
fn m2_ring(order: &TermOrder) -> String {
    let vars: Vec<String> = order.sigma().iter().map(|i| format!("x{i}")).collect();
    let mo = match order.family() {
        OrderFamily::DegRevLex => "GRevLex",
        OrderFamily::Lex => "Lex",
    };
    format!("R = QQ[{}, MonomialOrder => {mo}];\n", vars.join(", "))
}

fn m2_ideal(n: usize, k: usize) -> String {
    let squares: Vec<String> = (1..=n).map(|i| format!("x{i}^2")).collect();
    let sum: Vec<String> = (1..=n).map(|i| format!("x{i}")).collect();
    format!(
        "I = ideal({}, ({})^{k});\n",
        squares.join(", "),
        sum.join(" + ")
    )
}

fn basis_diff(a: &GroebnerBasis, b: &GroebnerBasis) -> Vec<Polynomial> {
    a.generators()
        .iter()
        .filter(|g| !b.generators().contains(g))
        .cloned()
        .collect()
}

pub(super) fn gb(c: &RunConfig, verify: bool) -> Result<Outcome> {
    let order = c.order()?;
    let g = closed_form_basis(c.n, c.k, &order)?;
    let mut mismatch = false;
    let mut text = format!(
        "# reduced Gröbner basis of I_{{{},{}}}, {} with σ = {}: {} elements\n",
        c.n,
        c.k,
        order.family(),
        sigma_text(&order.sigma()),
        g.len()
    );
    for p in g.generators() {
        let _ = writeln!(text, "{p}");
    }
    let mut verification = Value::Null;
    if verify {
        let oracle = buchberger(&ideal_generators(c.n, c.k, &order)?, &order)?;
        let only_closed = basis_diff(&g, &oracle);
        let only_oracle = basis_diff(&oracle, &g);
        let equal = g.same_generators(&oracle);
        mismatch = !equal;
        if equal {
            text.push_str("# verify: closed form equals the Buchberger output\n");
        } else {
            text.push_str("# verify: MISMATCH against the Buchberger output\n");
            for p in &only_closed {
                let _ = writeln!(text, "- {p}");
            }
            for p in &only_oracle {
                let _ = writeln!(text, "+ {p}");
            }
        }
        verification = json!({
            "equal": equal,
            "only_closed_form": only_closed.iter().map(|p| p.to_string()).collect::<Vec<_>>(),
            "only_oracle": only_oracle.iter().map(|p| p.to_string()).collect::<Vec<_>>(),
        });
    }
    let json = json!({
        "n": c.n,
        "k": c.k,
        "order": { "family": order.family(), "sigma": order.sigma() },
        "generators": g.generators().iter().map(poly_json).collect::<Vec<_>>(),
        "leading_monomials": g.leading_monomials().iter().map(|m| m.to_string()).collect::<Vec<_>>(),
        "verify": verification,
    });
    let gens: Vec<String> = g.generators().iter().map(|p| p.to_string()).collect();
    let cas = format!(
        "{}{}G = {{{}}};\nassert(ideal G == I)\nassert(ideal leadTerm gens gb I == ideal apply(G, leadTerm))\n",
        m2_ring(&order),
        m2_ideal(c.n, c.k),
        gens.join(", ")
    );
    Ok(Outcome {
        text,
        json,
        cas: Some(cas),
        mismatch,
    })
}

pub(super) fn hilbert(c: &RunConfig) -> Result<Outcome> {
    let hs = hilbert_series(c.n, c.k)?;
    let coeffs: Vec<Value> = hs.coefficients.iter().map(big_json).collect();
    let cas = hs
        .coefficients
        .iter()
        .enumerate()
        .map(|(d, v)| match d {
            0 => v.to_string(),
            1 => format!("{v}*t"),
            _ => format!("{v}*t^{d}"),
        })
        .collect::<Vec<_>>()
        .join(" + ");
    Ok(Outcome {
        text: format!("{hs}\n"),
        json: json!({ "n": c.n, "k": c.k, "coefficients": coeffs }),
        cas: Some(cas + "\n"),
        mismatch: false,
    })
}

fn witness_json(w: &KernelWitness) -> Value {
    let s = &w.witness;
    json!({
        "variant": s.variant,
        "p": s.p(),
        "a": rational_json(s.a.coeffs()),
        "lprime": s.lprime.as_ref().map(|p| p.to_string()),
        "f": s.f.as_ref().map(|p| p.to_string()),
        "g": s.g.to_string(),
        "b": rational_json(&s.b),
        "lambda": s.lambda.as_deref().map(rational_json),
        "identity": s.identity_text(),
        "element": w.element.to_string(),
        "degree": w.degree,
        "identity_holds": w.identity_holds,
        "nonzero_in_quotient": w.nonzero_in_quotient,
        "killed_by_power": w.killed_by_power,
        "verified": w.verified(),
    })
}

fn wlp_text(v: &WlpVerdict, show_witness: bool) -> String {
    let yes = |b: bool| if b { "holds" } else { "fails" };
    let mut t = format!(
        "R/I_{{{},{}}}: WLP {} (classification: {})\n",
        v.n,
        v.k,
        yes(v.holds),
        yes(v.classified)
    );
    if v.inconclusive {
        t.push_str(
            "INCONCLUSIVE: classification says WLP but some map never reached maximal rank\n",
        );
    }
    let _ = writeln!(
        t,
        "maps ·ℓ^{} on R/I_{{{},2}} (trials {}, seed {}):",
        v.k,
        v.n - 1,
        v.trials,
        v.seed
    );
    for m in &v.maps {
        let _ = writeln!(
            t,
            "  A_{} -> A_{}: rank {} of {} [{:?}]",
            m.from, m.to, m.rank, m.required, m.certificate
        );
    }
    if !v.failing.is_empty() {
        t.push_str("failing maps:\n");
        for f in &v.failing {
            let _ = writeln!(
                t,
                "  A_{} -> A_{}: rank {} < {}",
                f.from, f.to, f.rank, f.required
            );
        }
    }
    if let (true, Some(w)) = (show_witness, &v.witness) {
        let _ = writeln!(
            t,
            "witness ({:?}, p = {}):",
            w.witness.variant,
            w.witness.p()
        );
        t.push_str(&w.witness.identity_text());
        let _ = writeln!(t, "kernel element in degree {}: {}", w.degree, w.element);
        let _ = writeln!(
            t,
            "identity holds: {}, nonzero in A: {}, killed by ℓ^{}: {}",
            w.identity_holds, w.nonzero_in_quotient, v.k, w.killed_by_power
        );
    }
    t
}

pub(super) fn wlp(c: &RunConfig, algebra: AlgebraChoice, witness: bool) -> Result<Outcome> {
    let opts = WlpOptions {
        trials: c.trials,
        seed: c.seed,
        algebra: match algebra {
            AlgebraChoice::Initial => RankAlgebra::Initial,
            AlgebraChoice::Original => RankAlgebra::Original,
        },
        want_witness: witness,
    };
    let v = verify_wlp(c.n, c.k, &opts)?;
    let witness_ok = v.witness.as_ref().is_none_or(KernelWitness::verified);
    let mismatch = !v.agrees() || v.inconclusive || !witness_ok;
    let json = json!({
        "n": v.n,
        "k": v.k,
        "holds": v.holds,
        "classified": v.classified,
        "inconclusive": v.inconclusive,
        "failing": v.failing,
        "maps": v.maps,
        "trials": v.trials,
        "seed": v.seed,
        "witness": v.witness.as_ref().map(witness_json),
    });
    let cas = v.witness.as_ref().map(|w| {
        let s = &w.witness;
        let o = s.order();
        format!(
            "{}S = R/ideal(apply(gens R, x -> x^2));\nl = {};\nseed = {};\ng = {};\nassert(l^{} * seed == ({})^2 * g)\n",
            m2_ring(&o),
            s.a.polynomial(&o),
            s.kernel_seed(),
            s.g,
            s.exponent(),
            (1..=s.nvars()).map(|i| format!("x{i}")).collect::<Vec<_>>().join(" + ")
        )
    });
    Ok(Outcome {
        text: wlp_text(&v, witness),
        json,
        cas,
        mismatch,
    })
}

fn table_json(
    c: &RunConfig,
    method: &str,
    ideal: &str,
    t: &BettiTable,
    certified: Option<bool>,
) -> Value {
    json!({
        "n": c.n,
        "k": c.k,
        "method": method,
        "ideal": ideal,
        "betti": t.entries().collect::<Vec<_>>(),
        "pd": t.pd(),
        "reg": t.reg(),
        "minimal_certified": certified,
    })
}

fn table_text(
    c: &RunConfig,
    method: &str,
    ideal: &str,
    t: &BettiTable,
    certified: Option<bool>,
) -> String {
    let mut s = format!(
        "Betti table of {ideal} for n = {}, k = {} ({method})\n{t}",
        c.n, c.k
    );
    let show = |v: Option<usize>| v.map_or("-".to_string(), |x| x.to_string());
    let _ = writeln!(s, "pd = {}, reg = {}", show(t.pd()), show(t.reg()));
    if let Some(cert) = certified {
        let _ = writeln!(
            s,
            "minimal resolution certified: {}",
            if cert { "yes" } else { "no" }
        );
    }
    s
}

pub(super) fn betti(c: &RunConfig, method: BettiMethod) -> Result<Outcome> {
    let full = "in(I)";
    let sq = "J";
    let ideal = initial_ideal(c.n, c.k)?;
    let cas = format!(
        "R = QQ[{}];\nI = monomialIdeal({});\nbetti res I\n",
        m2_vars(c.n),
        m2_gens(&ideal)
    );
    let (text, json, mismatch) = match method {
        BettiMethod::Ghp => {
            let t = betti_ghp(c.n, c.k)?;
            (
                table_text(c, "ghp", sq, &t, None),
                table_json(c, "ghp", sq, &t, None),
                false,
            )
        }
        BettiMethod::Murai => {
            let t = betti_murai(c.n, c.k)?;
            (
                table_text(c, "murai", full, &t, None),
                table_json(c, "murai", full, &t, None),
                false,
            )
        }
        BettiMethod::Mvt => {
            let b = betti_from_mvt(&build_mvt(&ideal));
            let cert = Some(b.minimal_certified);
            (
                table_text(c, "mvt", full, &b.table, cert),
                table_json(c, "mvt", full, &b.table, cert),
                !b.minimal_certified,
            )
        }
        BettiMethod::All => {
            let ghp = betti_ghp(c.n, c.k)?;
            let murai = betti_murai(c.n, c.k)?;
            let mvt = betti_from_mvt(&build_mvt(&ideal));
            let agree = murai == mvt.table && mvt.minimal_certified;
            let cert = Some(mvt.minimal_certified);
            let mut text = table_text(c, "ghp", sq, &ghp, None);
            text.push('\n');
            text.push_str(&table_text(c, "murai", full, &murai, None));
            text.push('\n');
            text.push_str(&table_text(c, "mvt", full, &mvt.table, cert));
            text.push_str(if agree {
                "\n== all methods agree ==\n"
            } else {
                "\n== METHODS DISAGREE ==\n"
            });
            let json = json!({
                "n": c.n,
                "k": c.k,
                "method": "all",
                "tables": [
                    table_json(c, "ghp", sq, &ghp, None),
                    table_json(c, "murai", full, &murai, None),
                    table_json(c, "mvt", full, &mvt.table, cert),
                ],
                "agree": agree,
            });
            (text, json, !agree)
        }
    };
    Ok(Outcome {
        text,
        json,
        cas: Some(cas),
        mismatch,
    })
}

fn m2_vars(n: usize) -> String {
    (1..=n)
        .map(|i| format!("x{i}"))
        .collect::<Vec<_>>()
        .join(", ")
}

fn m2_gens(ideal: &MonomialIdeal) -> String {
    ideal
        .generators()
        .iter()
        .map(Monomial::to_string)
        .collect::<Vec<_>>()
        .join(", ")
}

pub(super) fn count(c: &RunConfig, what: CountWhat, degree: Option<usize>) -> Result<Outcome> {
    let (text, json) = match what {
        CountWhat::Generators => {
            let counts = count_generators_by_degree(c.n, c.k)?;
            let text: String = counts.iter().map(|(d, v)| format!("{d}: {v}\n")).collect();
            let map: serde_json::Map<String, Value> = counts
                .iter()
                .map(|(d, v)| (d.to_string(), big_json(v)))
                .collect();
            (
                text,
                json!({ "n": c.n, "k": c.k, "what": "generators", "counts": map }),
            )
        }
        CountWhat::Bases => {
            let v = count_distinct_bases(c.n, c.k)?;
            (
                format!("{v}\n"),
                json!({ "n": c.n, "k": c.k, "what": "bases", "value": big_json(&v) }),
            )
        }
        CountWhat::StandardMonomials => {
            let d = degree.ok_or_else(|| invalid("--degree is required for standard-monomials"))?;
            let v = count_standard_monomials(c.n, c.k, d);
            (
                format!("{v}\n"),
                json!({ "n": c.n, "k": c.k, "what": "standard-monomials", "degree": d, "value": big_json(&v) }),
            )
        }
    };
    Ok(Outcome {
        text,
        json,
        cas: None,
        mismatch: false,
    })
}

fn parse_steps(word: &str) -> Result<Vec<Step>> {
    word.chars()
        .map(|ch| match ch.to_ascii_uppercase() {
            'N' => Ok(Step::N),
            'E' => Ok(Step::E),
            other => Err(invalid(format!("step `{other}` is neither N nor E"))),
        })
        .collect()
}

pub(super) fn path(
    n: usize,
    set: Option<&[usize]>,
    steps: Option<&str>,
    k: Option<usize>,
) -> Result<Outcome> {
    let path = match (set, steps) {
        (Some(s), None) => LatticePath::tau_inverse(&Monomial::from_var_set(n, s)?)?,
        (None, Some(w)) => {
            let p = LatticePath::from_steps(&parse_steps(w)?)?;
            if p.len() != n {
                return Err(invalid(format!(
                    "step word has length {}, expected {n}",
                    p.len()
                )));
            }
            p
        }
        _ => return Err(invalid("give exactly one of --set or --steps")),
    };
    let touch = k.map(|k| path.first_touch(k));
    let mut text = format!("{path}  ({})\n{}", path.tau(), path.render());
    if let (Some(k), Some(t)) = (k, touch) {
        let _ = match t {
            Some(j) => writeln!(text, "first touch of y = x + {k} at step {j}"),
            None => writeln!(text, "never touches y = x + {k}"),
        };
    }
    let json = json!({
        "n": n,
        "steps": path.to_string(),
        "monomial": path.tau().to_string(),
        "k": k,
        "first_touch": touch.flatten(),
    });
    Ok(Outcome {
        text,
        json,
        cas: None,
        mismatch: false,
    })
}
