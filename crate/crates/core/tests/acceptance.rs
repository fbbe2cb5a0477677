//! Acceptance suite: one line per criterion, non-zero exit if any fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use grassmann_bordism::flag::{check_power_sum_shift, FlagContext};
use grassmann_bordism::grassmann::{sp_pullback_closed_form, sp_pullback_via_newton, sw_vector};
use grassmann_bordism::symmetric::verify_newton;
use grassmann_bordism::verify::{
    check_block_form, enumerate_gd, fossum_check, proposition_matrix, verify_theorem,
};
use grassmann_bordism::{Field, Gf2Poly, GrassmannianDesc, Method, Monomial, VerifyOptions};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

type Outcome = Result<(), Vec<String>>;
type Criterion = (&'static str, fn() -> Outcome);

fn collect(failures: Vec<String>) -> Outcome {
    if failures.is_empty() {
        Ok(())
    } else {
        Err(failures)
    }
}

/// Real `G_k(R^{n+k})` with `1 <= k < n` and `n + k <= max_ambient`.
fn real_grassmannians(max_ambient: u32) -> Vec<GrassmannianDesc> {
    let mut out = Vec::new();
    for ambient in 3..=max_ambient {
        for k in 1..ambient {
            let n = ambient - k;
            if k < n {
                out.push(GrassmannianDesc::real(k, n).unwrap());
            }
        }
    }
    out
}

fn bounding_criterion_matches_vanishing_numbers() -> Outcome {
    let mut failures = Vec::new();
    for g in real_grassmannians(9) {
        let zero = sw_vector(&g).unwrap().is_zero();
        if g.bounds() != zero {
            failures.push(format!(
                "{}: bounds={} but all-zero={zero}",
                g.label(),
                g.bounds()
            ));
        }
    }
    collect(failures)
}

fn power_sum_routes_agree() -> Outcome {
    let mut failures = Vec::new();
    for g in real_grassmannians(8) {
        let ctx = FlagContext::new(g.ambient() as usize).unwrap();
        for p in 1..=g.ambient() {
            let newton = sp_pullback_via_newton(&g, p, p).unwrap();
            let closed = sp_pullback_closed_form(&g, p).unwrap();
            if ctx.normal_form(&newton).unwrap() != ctx.normal_form(&closed).unwrap() {
                failures.push(format!("{} p={p}: routes differ", g.label()));
            }
        }
    }
    collect(failures)
}

/// Every monomial in `vars` variables with exponents `<= max_exp`.
fn monomials_in_box(vars: usize, max_exp: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut exps = vec![0u32; vars];
    loop {
        out.push(Monomial::from_exponents(&exps));
        let Some(i) = exps.iter().position(|&e| e < max_exp) else {
            return out;
        };
        exps[i] += 1;
        exps[..i].fill(0);
    }
}

fn top_class_rules_match_normal_form() -> Outcome {
    let mut failures = Vec::new();
    for n in 1..=6usize {
        let ctx = FlagContext::new(n).unwrap();
        let top = ctx.top_degree();
        let standard_top = ctx.top_standard_monomial();
        for m in monomials_in_box(n, n as u32) {
            let nf = ctx.normal_form(&Gf2Poly::from_monomial(m.clone())).unwrap();
            if m.degree() == top {
                let by_rule = ctx
                    .top_class_value(&Gf2Poly::from_monomial(m.clone()))
                    .unwrap();
                if by_rule != nf.contains(&standard_top) {
                    failures.push(format!(
                        "N={n}: {m} evaluates to {by_rule} by permutation rule"
                    ));
                }
            }
            if ctx.is_vanishing_product_multiple(&m) && !nf.is_zero() {
                failures.push(format!(
                    "N={n}: {m} matches a vanishing product but reduces to {nf}"
                ));
            }
        }
    }
    collect(failures)
}

fn power_sum_shift_identity_holds() -> Outcome {
    let mut failures = Vec::new();
    for g in real_grassmannians(7) {
        for j in 1..=g.k {
            if !check_power_sum_shift(g.n, g.k, j).unwrap() {
                failures.push(format!("n={} k={} j={j}", g.n, g.k));
            }
        }
    }
    collect(failures)
}

fn proposition_matrices_have_block_form() -> Outcome {
    let mut failures = Vec::new();
    for d in (2..=30).step_by(2) {
        let (e, m) = proposition_matrix(d).unwrap();
        failures.extend(check_block_form(&e, &m));
    }
    collect(failures)
}

fn fossum_instances_hold() -> Outcome {
    let mut failures = Vec::new();
    for k in 1..=6u32 {
        for n in (k + 1)..=6 {
            if 4 * n * k > 24 {
                continue;
            }
            let out = fossum_check(k, n, VerifyOptions::default()).unwrap();
            if !out.holds() {
                failures.push(format!(
                    "k={k} n={n}: doubled {} vs fourth power {}",
                    out.doubled.to_bitstring(),
                    out.fourth_power.to_bitstring()
                ));
            }
        }
    }
    collect(failures)
}

fn independence_at_desk_scale() -> Outcome {
    let mut failures = Vec::new();
    let labels = |e: &grassmann_bordism::verify::GdEnumeration| {
        e.members.iter().map(|g| g.label()).collect::<Vec<_>>()
    };
    let g2 = enumerate_gd(2, &Field::ALL);
    if labels(&g2) != ["G_1(R^3)"] {
        failures.push(format!("G(2) = {:?}", labels(&g2)));
    }
    if !labels(&enumerate_gd(4, &Field::ALL)).contains(&"G_1(R^5)".to_string()) {
        failures.push("G(4) does not contain RP^4".into());
    }
    if labels(&enumerate_gd(4, &[Field::R])) != ["G_1(R^5)"] {
        failures.push("real G(4) is not {RP^4}".into());
    }
    let opts = VerifyOptions::default();
    for d in (2..=16).step_by(2) {
        let oracle = verify_theorem(d, Method::Oracle, opts).unwrap();
        let induction = verify_theorem(d, Method::MatrixInduction, opts).unwrap();
        if oracle.rank != oracle.members.len() {
            failures.push(format!(
                "d={d}: oracle rank {} of |G(d)| = {}",
                oracle.rank,
                oracle.members.len()
            ));
        }
        if !induction.verified {
            failures.extend(induction.failures.iter().cloned());
        }
        if oracle.verified != induction.verified {
            failures.push(format!(
                "d={d}: oracle verified={} but matrix-induction verified={}",
                oracle.verified, induction.verified
            ));
        }
    }
    collect(failures)
}

fn even_block_appears_exactly_at_multiples_of_eight() -> Outcome {
    let mut failures = Vec::new();
    for d in (2..=64).step_by(2) {
        let nonempty = !enumerate_gd(d, &[Field::R]).e_members().is_empty();
        if nonempty != (d % 8 == 0) {
            failures.push(format!("d={d}: E(d) nonempty = {nonempty}"));
        }
    }
    collect(failures)
}

fn random_poly(rng: &mut StdRng) -> Gf2Poly {
    let terms = rng.random_range(0..12);
    Gf2Poly::from_terms((0..terms).map(|_| {
        let vars = rng.random_range(0..5);
        let exps: Vec<u32> = (0..vars).map(|_| rng.random_range(0..6)).collect();
        Monomial::from_exponents(&exps)
    }))
}

fn newton_and_frobenius() -> Outcome {
    let mut failures = Vec::new();
    for q in 1..=8 {
        for p in 1..=q {
            if !verify_newton(q, p).unwrap() {
                failures.push(format!("Newton identity fails for q={q} p={p}"));
            }
        }
    }
    let mut rng = StdRng::seed_from_u64(0x5eed);
    for i in 0..1000 {
        let f = random_poly(&mut rng);
        let doubled = Gf2Poly::from_terms(f.terms().iter().map(|m| m.scale(2)));
        if f.pow(2, None) != doubled {
            failures.push(format!("sample {i}: ({f})^2 is not exponent doubling"));
        }
    }
    collect(failures)
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        (
            "bounding criterion agrees with vanishing SW vectors, n+k <= 9",
            bounding_criterion_matches_vanishing_numbers,
        ),
        (
            "power sums: substitution route equals closed form, n+k <= 8",
            power_sum_routes_agree,
        ),
        (
            "top-class rules agree with normal form, N <= 6",
            top_class_rules_match_normal_form,
        ),
        (
            "power-sum shift identity in the flag ring, n+k <= 7",
            power_sum_shift_identity_holds,
        ),
        (
            "f_l matrices: unitriangular odd block, zero even block, d <= 30",
            proposition_matrices_have_block_form,
        ),
        (
            "doubled Grassmannian equals fourth power, 4nk <= 24",
            fossum_instances_hold,
        ),
        (
            "full-field independence by oracle and matrix induction, d <= 16",
            independence_at_desk_scale,
        ),
        (
            "even block nonempty iff d = 0 mod 8, d <= 64",
            even_block_appears_exactly_at_multiples_of_eight,
        ),
        (
            "Newton identities q <= 8 and Frobenius on 1000 samples",
            newton_and_frobenius,
        ),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = check();
        let elapsed = start.elapsed();
        let verdict = if outcome.is_ok() { "PASS" } else { "FAIL" };
        println!(
            "criterion {}: {verdict} {name} ({})",
            i + 1,
            fmt_duration(elapsed)
        );
        if let Err(details) = outcome {
            failed += 1;
            for line in details.iter().take(20) {
                println!("    {line}");
            }
            if details.len() > 20 {
                println!("    .. {} more", details.len() - 20);
            }
        }
    }
    println!(
        "acceptance: {} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

fn fmt_duration(d: Duration) -> String {
    format!("{:.2}s", d.as_secs_f64())
}
