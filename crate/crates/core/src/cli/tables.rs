use std::fmt::Write as _;

use serde::Serialize;
use serde_json::json;

use super::Outcome;
use crate::closed_form::{
    closed_form_basis, count_distinct_bases, f_polynomial, g_via_f_expansion, lambda_coefficients,
};
use crate::error::Result;
use crate::lattice::LatticePath;
use crate::lefschetz::{classify_wlp, witness, GenericLinearForm};
use crate::poly::{elementary_symmetric, rat, ratio, Monomial, Polynomial, TermOrder};
use crate::resolution::{a_p, betti_from_mvt, betti_murai, build_mvt, initial_ideal};

#[derive(Debug, Serialize)]
struct Check {
    section: &'static str,
    name: String,
    expected: String,
    found: String,
    pass: bool,
}

#[derive(Default)]
struct Report {
    checks: Vec<Check>,
}

impl Report {
    fn check(
        &mut self,
        section: &'static str,
        name: impl Into<String>,
        expected: impl ToString,
        found: impl ToString,
    ) {
        let (expected, found) = (expected.to_string(), found.to_string());
        let pass = expected == found;
        self.checks.push(Check {
            section,
            name: name.into(),
            expected,
            found,
            pass,
        });
    }
}

fn list<T: ToString>(v: &[T]) -> String {
    v.iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(", ")
}

fn e(o: &TermOrder, vars: &[usize], d: usize) -> Polynomial {
    elementary_symmetric(o, vars, d)
}

/// Regenerates the reference tables and checks each value.
pub(super) fn tables() -> Result<Outcome> {
    let mut r = Report::default();
    let o5 = TermOrder::degrevlex(5);

    for i in 1..=5 {
        let others: Vec<usize> = (1..=5).filter(|&j| j != i).collect();
        let x = Polynomial::monomial(&o5, Monomial::variable(5, i));
        let expected = &x * &e(&o5, &others, 2);
        r.check(
            "f-basis n=5 k=2",
            format!("f_{{{i}}}"),
            expected,
            f_polynomial(&[i], 5, 2, &o5)?,
        );
    }

    r.check(
        "lambda n=5 d=3 k=2",
        "λ",
        list(&[ratio(1, 3), ratio(-2, 3)]),
        list(&lambda_coefficients(3, 2)?),
    );
    r.check(
        "lambda n=5 d=3 k=2",
        "g_{1,3,4} via f",
        e(&o5, &[1, 3, 4, 5], 3),
        g_via_f_expansion(&[1, 3, 4], 5, 2, &o5)?,
    );

    let g52 = closed_form_basis(5, 2, &o5)?;
    let mut expected: Vec<Polynomial> = (1..=5)
        .map(|i| Polynomial::monomial(&o5, Monomial::power_of(5, i, 2)))
        .collect();
    expected.push(e(&o5, &[1, 2, 3, 4, 5], 2));
    expected.push(e(&o5, &[1, 3, 4, 5], 3));
    expected.push(e(&o5, &[2, 3, 4, 5], 3));
    let mut want: Vec<String> = expected.iter().map(ToString::to_string).collect();
    let mut got: Vec<String> = g52.generators().iter().map(ToString::to_string).collect();
    want.sort();
    got.sort();
    r.check("G_{5,2}", "generators", want.join(" | "), got.join(" | "));

    let path = LatticePath::tau_inverse(&Monomial::from_var_set(5, &[1, 3, 4])?)?;
    r.check("lattice path", "word of x1*x3*x4", "NENNE", path);
    r.check(
        "lattice path",
        "first touch of y = x + 2",
        4,
        path.first_touch(2).map_or(0, |j| j),
    );

    let n_table = [
        ((5, 2), 30u64),
        ((6, 2), 90),
        ((7, 2), 630),
        ((5, 3), 10),
        ((6, 3), 60),
        ((7, 3), 210),
    ];
    for ((n, k), v) in n_table {
        r.check(
            "basis counts",
            format!("N_{{{n},{k}}}"),
            v,
            count_distinct_bases(n, k)?,
        );
    }

    let rows: [(&[usize], [u64; 4]); 6] = [
        (&[1, 2], [1, 2, 0, 0]),
        (&[1, 2, 3], [1, 3, 3, 0]),
        (&[1, 2, 4], [1, 4, 5, 1]),
        (&[1, 3, 4], [1, 4, 6, 2]),
        (&[2, 3, 4], [1, 4, 6, 3]),
        (&[1, 2, 3, 4], [1, 4, 6, 4]),
    ];
    for (set, want) in rows {
        let u = Monomial::from_var_set(4, set)?;
        let found: Vec<u64> = (1..=4).map(|p| a_p(&u, p)).collect::<Result<_>>()?;
        r.check(
            "A_p table",
            format!("A_1..A_4({u})"),
            list(&want),
            list(&found),
        );
    }

    let murai = betti_murai(4, 2)?;
    r.check(
        "Betti in(I_{4,2})",
        "row 2",
        list(&[5, 2, 0, 0]),
        list(&murai.row(2)),
    );
    r.check(
        "Betti in(I_{4,2})",
        "row 3",
        list(&[2, 15, 16, 5]),
        list(&murai.row(3)),
    );
    let tree = build_mvt(&initial_ideal(4, 2)?);
    let mvt = betti_from_mvt(&tree);
    r.check(
        "Betti in(I_{4,2})",
        "MVT totals",
        list(&[7, 17, 16, 5]),
        list(&mvt.table.totals()),
    );
    r.check(
        "Betti in(I_{4,2})",
        "MVT minimal",
        true,
        mvt.minimal_certified,
    );
    r.check(
        "Betti in(I_{4,2})",
        "MVT final positions",
        list(&[4, 10, 12, 14, 22, 23, 26, 27, 30, 31]),
        list(&tree.top_final_positions()),
    );

    for (n, k, want) in [(9, 3, true), (10, 4, false), (4, 2, true)] {
        r.check(
            "WLP classification",
            format!("({n},{k})"),
            want,
            classify_wlp(n, k)?,
        );
    }

    let a = GenericLinearForm::from_integers(&[1, 2, 3, 4, 5])?;
    let w = witness::syzygy_witness_odd_with(&a, vec![rat(-1), rat(2)], &rat(1))?;
    r.check(
        "odd syzygy n=5",
        "identity",
        true,
        witness::verify_witness(&w),
    );
    r.check(
        "odd syzygy n=5",
        "ℓ^2 ℓ' = -6(...)",
        witness::odd_lhs_closed_form(&a)?,
        w.lhs().sfp(),
    );

    let all_pass = r.checks.iter().all(|c| c.pass);
    let mut text = String::new();
    let mut section = "";
    for c in &r.checks {
        if c.section != section {
            section = c.section;
            let _ = writeln!(text, "## {section}");
        }
        let tag = if c.pass { "PASS" } else { "FAIL" };
        let _ = writeln!(text, "[{tag}] {}: {}", c.name, c.found);
        if !c.pass {
            let _ = writeln!(text, "       expected {}", c.expected);
        }
    }
    text.push_str("\nlattice path of x1*x3*x4:\n");
    text.push_str(&path.render());
    text.push_str("\nBetti diagram of in(I_{4,2}):\n");
    text.push_str(&murai.to_string());
    let _ = writeln!(
        text,
        "\n{} of {} checks pass",
        r.checks.iter().filter(|c| c.pass).count(),
        r.checks.len()
    );
    let json = json!({ "checks": r.checks, "all_pass": all_pass });
    Ok(Outcome {
        text,
        json,
        cas: None,
        mismatch: !all_pass,
    })
}
