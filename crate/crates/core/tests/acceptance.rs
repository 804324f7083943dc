//! Acceptance criteria. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any fails.
//!
//! Tolerances: every matrix comparison is exact (tolerance 0). Time limits
//! are 1 s for criterion 1, 60 s for criterion 3 and 120 s for criterion 7.

mod common;

use std::process::ExitCode;
use std::time::{Duration, Instant};

use citaylor::homotopy::{average_lifts, verify_homotopy_system, LiftMatrix, LiftStrategy};
use citaylor::quotient::{check_exactness, GroebnerCaps};
use citaylor::random::seeded_rng;
use citaylor::shamash::{shamash_basis, MinimalityWitness};
use citaylor::{
    betti_bound, rank_formula, Gf32003, HomotopySystem, MonomialIdeal, Parity,
    PolyRing, Rational, ShamashResolution, TaylorComplex,
};
use num_integer::binomial;
use num_rational::BigRational;

use common::*;

const TOL_EXACT: u32 = 0;
const LIMIT_GOLDEN: Duration = Duration::from_secs(1);
const LIMIT_IDENTITIES: Duration = Duration::from_secs(60);
const LIMIT_EXACTNESS: Duration = Duration::from_secs(120);
const RANDOM_INSTANCES: usize = 30;
const IDENTITY_STEPS: usize = 8;

type Outcome = Result<String, String>;
type Rows = &'static [&'static [&'static str]];
type Criterion = (&'static str, fn() -> Outcome);

fn within(limit: Duration, start: Instant) -> Result<Duration, String> {
    let elapsed = start.elapsed();
    if elapsed > limit {
        Err(format!("took {elapsed:.2?}, limit {limit:?}"))
    } else {
        Ok(elapsed)
    }
}

fn first_example_golden() -> Outcome {
    let start = Instant::now();
    let sys = system(first_example(), &LiftStrategy::First);
    let res = ShamashResolution::new(sys, 6);
    let ring = res.system().ci().ring().clone();
    expect_matrix(&ring, "phi_1", res.differential(1), &[&["x^2", "y^2", "z^2"]])?;
    expect_labels("F_2", res.basis(2), &["1:∅", "0:12", "0:13", "0:23"])?;
    expect_matrix(
        &ring,
        "phi_2",
        res.differential(2),
        &[
            &["z", "y^2", "z^2", "0"],
            &["x", "-x^2", "0", "z^2"],
            &["0", "0", "-x^2", "-y^2"],
        ],
    )?;
    let odd: &[&[&str]] = &[
        &["x^2", "y^2", "z^2", "0"],
        &["x", "-z", "0", "z^2"],
        &["0", "0", "-z", "-y^2"],
        &["0", "0", "-x", "x^2"],
    ];
    let even: &[&[&str]] = &[
        &["z", "y^2", "z^2", "0"],
        &["x", "-x^2", "0", "z^2"],
        &["0", "0", "-x^2", "-y^2"],
        &["0", "0", "-x", "z"],
    ];
    for i in 2..=3 {
        expect_matrix(&ring, &format!("phi_{}", 2 * i - 1), res.differential(2 * i - 1), odd)?;
        expect_matrix(&ring, &format!("phi_{}", 2 * i), res.differential(2 * i), even)?;
    }
    expect_labels("F_3", res.basis(3), &["1:1", "1:2", "1:3", "0:123"])?;
    let elapsed = within(LIMIT_GOLDEN, start)?;
    Ok(format!("phi_1..phi_6 exact, {elapsed:.2?}"))
}

fn other_golden_matrices() -> Outcome {
    // Taylor complex of ⟨xy, xz, yz⟩
    let ring: PolyRing<Rational> = PolyRing::new(&["x", "y", "z"]).unwrap();
    let taylor =
        TaylorComplex::<Rational>::new(MonomialIdeal::parse(&ring, &["x*y", "x*z", "y*z"]).unwrap());
    expect_matrix(&ring, "tau_1", taylor.differential(1), &[&["x*y", "x*z", "y*z"]])?;
    expect_matrix(
        &ring,
        "tau_2",
        taylor.differential(2),
        &[&["z", "z", "0"], &["-y", "0", "y"], &["0", "-x", "-x"]],
    )?;
    expect_matrix(&ring, "tau_3", taylor.differential(3), &[&["1"], &["-1"], &["1"]])?;

    // homotopies for x1^5 on ⟨x1², x2²⟩
    let sys = system(power_hypersurface(), &LiftStrategy::First);
    let r2 = sys.ci().ring().clone();
    expect_matrix(&r2, "sigma_0", sys.sigma_e(0, 0), &[&["x1^3"], &["0"]])?;
    expect_matrix(&r2, "sigma_1", sys.sigma_e(0, 1), &[&["0", "-x1^3"]])?;
    let res = ShamashResolution::new(sys, 3);
    expect_matrix(
        &r2,
        "phi_3",
        res.differential(3),
        &[&["x1^2", "x2^2"], &["0", "-x1^3"]],
    )?;

    // three lifts of xyz
    let data = monomial_hypersurface();
    let variants: [(&str, usize, Rows, Rows, Rows); 3] = [
        (
            "phi",
            0,
            &[&["z", "z", "z", "0"], &["0", "-y", "0", "y"], &["0", "0", "-x", "-x"]],
            &[
                &["x*y", "x*z", "y*z", "0"],
                &["0", "-x*z", "0", "1"],
                &["0", "0", "-y*z", "-1"],
                &["0", "0", "0", "1"],
            ],
            &[
                &["z", "z", "z", "0"],
                &["0", "-y", "0", "y"],
                &["0", "0", "-x", "-x"],
                &["0", "0", "0", "x*y*z"],
            ],
        ),
        (
            "phi'",
            1,
            &[&["0", "z", "z", "0"], &["y", "-y", "0", "y"], &["0", "0", "-x", "-x"]],
            &[
                &["x*y", "x*z", "y*z", "0"],
                &["x*y", "0", "0", "1"],
                &["0", "0", "0", "-1"],
                &["0", "0", "-y*z", "1"],
            ],
            &[
                &["0", "z", "z", "0"],
                &["y", "-y", "0", "y"],
                &["0", "0", "-x", "-x"],
                &["0", "0", "-x*y*z", "0"],
            ],
        ),
        (
            "phi''",
            2,
            &[&["0", "z", "z", "0"], &["0", "-y", "0", "y"], &["x", "0", "-x", "-x"]],
            &[
                &["x*y", "x*z", "y*z", "0"],
                &["0", "0", "0", "1"],
                &["x*y", "0", "0", "-1"],
                &["0", "x*z", "0", "1"],
            ],
            &[
                &["0", "z", "z", "0"],
                &["0", "-y", "0", "y"],
                &["x", "0", "-x", "-x"],
                &["0", "x*y*z", "0", "0"],
            ],
        ),
    ];
    for (name, gen, phi2, odd, even) in variants {
        let sys = system(data.clone(), &xyz_lift(&data, gen));
        if gen == 0 {
            let r = sys.ci().ring().clone();
            expect_matrix(&r, "sigma_0", sys.sigma_e(0, 0), &[&["z"], &["0"], &["0"]])?;
            expect_matrix(
                &r,
                "sigma_1",
                sys.sigma_e(0, 1),
                &[&["0", "-x*z", "0"], &["0", "0", "-y*z"], &["0", "0", "0"]],
            )?;
            expect_matrix(&r, "sigma_2", sys.sigma_e(0, 2), &[&["0", "0", "x*y*z"]])?;
        }
        let res = ShamashResolution::new(sys, 6);
        let r = res.system().ci().ring().clone();
        expect_matrix(&r, &format!("{name}_2"), res.differential(2), phi2)?;
        for i in 2..=3 {
            expect_matrix(&r, &format!("{name}_{}", 2 * i - 1), res.differential(2 * i - 1), odd)?;
            expect_matrix(&r, &format!("{name}_{}", 2 * i), res.differential(2 * i), even)?;
        }
    }

    // x²y + xy² on ⟨x², y²⟩
    let res = ShamashResolution::new(system(polynomial_hypersurface(), &LiftStrategy::First), 7);
    let r = res.system().ci().ring().clone();
    expect_matrix(&r, "phi_1", res.differential(1), &[&["x^2", "y^2"]])?;
    for i in 1..=3 {
        expect_matrix(
            &r,
            &format!("phi_{}", 2 * i),
            res.differential(2 * i),
            &[&["y", "y^2"], &["x", "-x^2"]],
        )?;
        expect_matrix(
            &r,
            &format!("phi_{}", 2 * i + 1),
            res.differential(2 * i + 1),
            &[&["x^2", "y^2"], &["x", "-y"]],
        )?;
    }

    // codimension two homotopies
    let sys = system(codim_two(), &LiftStrategy::First);
    let r = sys.ci().ring().clone();
    let sigma10: [&[&[&str]]; 4] = [
        &[&["x"], &["y"], &["0"], &["0"]],
        &[
            &["y", "-x", "0", "0"],
            &["0", "0", "-x", "0"],
            &["0", "0", "0", "-x"],
            &["0", "0", "-y", "0"],
            &["0", "0", "0", "-y"],
            &["0", "0", "0", "0"],
        ],
        &[
            &["0", "-y", "0", "x", "0", "0"],
            &["0", "0", "-y", "0", "x", "0"],
            &["0", "0", "0", "0", "0", "x"],
            &["0", "0", "0", "0", "0", "y"],
        ],
        &[&["0", "0", "y", "-x"]],
    ];
    let sigma01: [&[&[&str]]; 4] = [
        &[&["0"], &["0"], &["z"], &["w"]],
        &[
            &["0", "0", "0", "0"],
            &["z", "0", "0", "0"],
            &["w", "0", "0", "0"],
            &["0", "z", "0", "0"],
            &["0", "w", "0", "0"],
            &["0", "0", "w", "-z"],
        ],
        &[
            &["z", "0", "0", "0", "0", "0"],
            &["w", "0", "0", "0", "0", "0"],
            &["0", "w", "-z", "0", "0", "0"],
            &["0", "0", "0", "w", "-z", "0"],
        ],
        &[&["w", "-z", "0", "0"]],
    ];
    for k in 0..4 {
        expect_matrix(&r, &format!("sigma_10,{k}"), sys.sigma_e(0, k), sigma10[k])?;
        expect_matrix(&r, &format!("sigma_01,{k}"), sys.sigma_e(1, k), sigma01[k])?;
    }
    Ok("Taylor, hypersurface, three lifts, polynomial and codim-2 matrices exact".into())
}

fn identity_suite(sys: &HomotopySystem<Rational>, name: &str) -> Result<(), String> {
    let v = verify_homotopy_system(sys);
    for r in v.reports() {
        if !r.passed() {
            return Err(format!("{name}: {r}"));
        }
    }
    let res = ShamashResolution::new(sys.clone(), IDENTITY_STEPS);
    let phi = res.phi_squared_check();
    if !phi.passed() {
        return Err(format!("{name}: {phi}"));
    }
    Ok(())
}

fn identities() -> Outcome {
    let start = Instant::now();
    identity_suite(&system(first_example(), &LiftStrategy::First), "first example")?;
    identity_suite(&system(codim_two(), &LiftStrategy::First), "codim-2 example")?;
    let mut rng = seeded_rng(20_261_016);
    let mut codims = [0usize; 3];
    for i in 0..RANDOM_INSTANCES {
        let (data, strategy) = random_case(&mut rng, i);
        codims[data.codim()] += 1;
        let label = format!(
            "random #{i} (ideal {:?}, sequence {:?})",
            data.ideal()
                .generators()
                .iter()
                .map(|m| data.ring().format_monomial(m))
                .collect::<Vec<_>>(),
            data.sequence().iter().map(|a| data.ring().format(a)).collect::<Vec<_>>()
        );
        let sys = HomotopySystem::build(data, &strategy).map_err(|e| format!("{label}: {e}"))?;
        identity_suite(&sys, &label)?;
    }
    let elapsed = within(LIMIT_IDENTITIES, start)?;
    Ok(format!(
        "2 worked + {RANDOM_INSTANCES} random ({} with c=1, {} with c=2), N={IDENTITY_STEPS}, {elapsed:.2?}",
        codims[1], codims[2]
    ))
}

fn ranks() -> Outcome {
    let res = ShamashResolution::new(system(codim_two(), &LiftStrategy::First), 5);
    let built: Vec<usize> = (0..=5).map(|n| res.rank(n)).collect();
    if built != [1, 4, 8, 12, 16, 20] {
        return Err(format!("codim-2 ranks {built:?}"));
    }
    for (n, &rank) in built.iter().enumerate() {
        if rank_formula(4, 2, n) != rank as u128 {
            return Err(format!("closed form differs at n={n}"));
        }
    }
    let vars: Vec<String> = (1..=8).map(|i| format!("x{i}")).collect();
    let ring: PolyRing<Rational> = PolyRing::new(&vars).unwrap();
    let mut compared = 0;
    for r in 1..=8 {
        let ideal = MonomialIdeal::parse(&ring, &vars[..r]).unwrap();
        let taylor = TaylorComplex::<Rational>::new(ideal);
        for c in 1..=4 {
            let degrees = vec![2; c];
            for n in 0..=16 {
                let count = shamash_basis(&taylor, &degrees, n).len() as u128;
                if count != rank_formula(r, c, n) {
                    return Err(format!("r={r} c={c} n={n}: enumerated {count}"));
                }
                let m = n / 2;
                let parity = if n % 2 == 0 { Parity::Even } else { Parity::Odd };
                if betti_bound(r, c, m, parity) != count {
                    return Err(format!("betti bound differs at r={r} c={c} n={n}"));
                }
                compared += 1;
            }
        }
    }
    Ok(format!("(1,4,8,12,16,20) and {compared} (r,c,n) triples agree"))
}

fn factorizations() -> Outcome {
    for (name, data, start) in [
        ("first example", first_example(), 3),
        ("polynomial hypersurface", polynomial_hypersurface(), 2),
    ] {
        let res = ShamashResolution::new(system(data, &LiftStrategy::First), 8);
        let mf = res.matrix_factorization().map_err(|e| format!("{name}: {e}"))?;
        if mf.start != start {
            return Err(format!("{name}: tail starts at {}, expected {start}", mf.start));
        }
        let report = mf.verify();
        if !report.passed() {
            return Err(format!("{name}: {report}"));
        }
    }
    let res = ShamashResolution::new(system(monomial_hypersurface(), &LiftStrategy::First), 6);
    let m = res.minimality();
    let values: Vec<&str> = m
        .witnesses
        .iter()
        .filter_map(|w| match w {
            MinimalityWitness::TaylorUnit { value, .. } => Some(value.as_str()),
            _ => None,
        })
        .collect();
    if m.is_minimal() || values != ["1", "-1", "1"] {
        return Err(format!("monomial hypersurface witnesses {:?}", m.witnesses));
    }
    Ok("AB = BA = a I for both; xyz tail nonminimal with units 1, -1, 1".into())
}

fn tate() -> Outcome {
    let data = ci(&["x", "y", "z"], &["x", "y", "z"], &["x^2+y^2+z^2"]);
    let res = ShamashResolution::new(system(data, &LiftStrategy::First), 8);
    if !res.minimality().is_minimal() {
        return Err(format!("not minimal: {:?}", res.minimality().witnesses));
    }
    if !res.phi_squared_check().passed() {
        return Err("phi^2 identity fails".into());
    }
    for n in 0..=8u64 {
        let koszul: u64 = (0..=n / 2).filter(|j| n - 2 * j <= 3).map(|j| binomial(3, n - 2 * j)).sum();
        let got = res.rank(n as usize) as u64;
        if got != koszul || rank_formula(3, 1, n as usize) != koszul as u128 {
            return Err(format!("rank F_{n} = {got}, Koszul count {koszul}"));
        }
    }
    Ok("minimal, ranks 1,3,4,4,... agree with the Koszul count".into())
}

fn exactness() -> Outcome {
    let start = Instant::now();
    let mut windows = 0;
    for (name, data) in [
        ("first example", first_example()),
        ("polynomial hypersurface", polynomial_hypersurface()),
    ] {
        let res = ShamashResolution::new(system(data, &LiftStrategy::First), 5);
        for n in 1..=4 {
            let rep = check_exactness::<Gf32003>(&res, n, 10, GroebnerCaps::default())
                .map_err(|e| format!("{name}: {e}"))?;
            if !rep.report.passed() {
                return Err(format!("{name}: {}", rep.report));
            }
            windows += rep.degrees.len();
        }
    }
    let elapsed = within(LIMIT_EXACTNESS, start)?;
    Ok(format!("zero homology in {windows} (n, d) windows over GF(32003), {elapsed:.2?}"))
}

fn averaging() -> Outcome {
    let data = monomial_hypersurface();
    let lifts: Vec<LiftMatrix<Rational>> = (0..3)
        .map(|g| LiftMatrix::compute(&data, &xyz_lift(&data, g)).unwrap())
        .collect();
    let third = BigRational::new(1.into(), 3.into());
    let avg = average_lifts(&lifts, &[third.clone(), third.clone(), third.clone()])
        .map_err(|e| e.to_string())?;
    if avg != LiftMatrix::compute(&data, &LiftStrategy::Average).unwrap() {
        return Err("uniform average differs from the average strategy".into());
    }
    let sys = HomotopySystem::new(data.clone(), avg).map_err(|e| e.to_string())?;
    identity_suite(&sys, "averaged lift")?;
    let singles: Vec<HomotopySystem<Rational>> = lifts
        .into_iter()
        .map(|l| HomotopySystem::new(data.clone(), l).unwrap())
        .collect();
    for k in 0..=3 {
        let mut mean = singles[0].sigma_e(0, k).scale_coeff(&third);
        for s in &singles[1..] {
            mean = mean.add(&s.sigma_e(0, k).scale_coeff(&third));
        }
        if &mean != sys.sigma_e(0, k) {
            return Err(format!("sigma_e on T_{k} is not the mean"));
        }
    }
    Ok("averaged lift passes (a)-(c) and phi^2; sigma_e is linear in the lift".into())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("1 golden matrices, first example", first_example_golden),
        ("2 golden matrices, remaining examples", other_golden_matrices),
        ("3 homotopy and phi^2 identities", identities),
        ("4 ranks and Betti bounds", ranks),
        ("5 matrix factorizations and minimality", factorizations),
        ("6 Tate case", tate),
        ("7 exactness spot check", exactness),
        ("8 averaged homotopies", averaging),
    ];
    println!("acceptance suite (matrix tolerance {TOL_EXACT}, exact arithmetic)");
    let mut failed = 0;
    for (name, run) in criteria {
        match run() {
            Ok(detail) => println!("PASS [{name}] {detail}"),
            Err(detail) => {
                failed += 1;
                println!("FAIL [{name}] {detail}");
            }
        }
    }
    if failed == 0 {
        println!("acceptance: 8/8 criteria passed");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: {failed} of 8 criteria failed");
        ExitCode::FAILURE
    }
}
