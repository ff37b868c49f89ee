//! End-to-end acceptance checks. Each test prints one PASS or FAIL line
//! per verified claim, so the test log doubles as a verification report.
//!
//! The structure test pins the categorical witness to a specific reference
//! triple. The canonical-first scan provably returns a different (equally
//! genuine) violation first, under every loop nesting and direction over
//! the canonical element order, so that single assertion fails by design
//! and documents the discrepancy; every other claim holds.

use std::process::Command;
use std::time::Instant;

use isochain::algebra::{
    build_semigroup, leq_dstar, rees_quotient, FiniteSemigroup, PropertyReport,
};
use isochain::counting::{
    binomial, closed_fix, closed_height_oddp, closed_order_ddp, closed_order_oddp, count_by_fix,
    count_by_height, order, triangle, StatKind,
};
use isochain::element::{ChainSize, PartialInjection};
use isochain::family::{enumerate_fast, enumerate_oracle, FamilyId};

const ODDP: FamilyId = FamilyId::OrderPreservingDecreasingIsometry;
const DDP: FamilyId = FamilyId::DecreasingIsometry;
const CEILING: u32 = 8;

fn el(text: &str) -> PartialInjection {
    text.parse().unwrap()
}

fn semigroup(family: FamilyId, n: u32) -> FiniteSemigroup {
    build_semigroup(family, ChainSize::new(n), CEILING).unwrap()
}

fn verdict(name: &str, ok: bool) -> bool {
    println!("{} {name}", if ok { "PASS" } else { "FAIL" });
    ok
}

#[test]
fn orders_of_preserving_family_match_closed_form() {
    let start = Instant::now();
    let expected: [u64; 8] = [1, 2, 5, 12, 27, 58, 121, 248];
    let mut ok = true;
    for n in 0..=7u32 {
        let brute = order(ODDP, ChainSize::new(n), CEILING).unwrap();
        ok &= brute == expected[n as usize] && brute == closed_order_oddp(n);
    }
    let elapsed = start.elapsed();
    ok = verdict(
        "oddp orders for n=0..7 equal 1,2,5,12,27,58,121,248 and the closed form",
        ok,
    ) && verdict(
        &format!("oddp order sweep finished in {elapsed:?} (< 5 s)"),
        elapsed.as_secs_f64() < 5.0,
    );
    assert!(ok);
}

#[test]
fn orders_of_decreasing_family_match_recurrence() {
    let start = Instant::now();
    let expected: [u64; 8] = [1, 2, 5, 13, 30, 66, 137, 279];
    let mut ok = true;
    for n in 0..=7u32 {
        let brute = order(DDP, ChainSize::new(n), CEILING).unwrap();
        ok &= brute == expected[n as usize] && brute == closed_order_ddp(n);
    }
    let elapsed = start.elapsed();
    ok = verdict(
        "ddp orders for n=0..7 equal 1,2,5,13,30,66,137,279 and the recurrence",
        ok,
    ) && verdict(
        &format!("ddp order sweep finished in {elapsed:?} (< 5 s)"),
        elapsed.as_secs_f64() < 5.0,
    );
    assert!(ok);
}

#[test]
fn tables_match_fixtures_byte_exactly() {
    let cases: [(FamilyId, StatKind, &str, &str); 3] = [
        (
            ODDP,
            StatKind::Height,
            "height",
            include_str!("fixtures/oddp_height_triangle.csv"),
        ),
        (
            ODDP,
            StatKind::Fix,
            "fix",
            include_str!("fixtures/oddp_fix_triangle.csv"),
        ),
        (
            DDP,
            StatKind::Fix,
            "fix",
            include_str!("fixtures/ddp_fix_triangle.csv"),
        ),
    ];
    let mut ok = true;
    for (family, stat, stat_arg, fixture) in cases {
        let lib = triangle(family, stat, 7, CEILING).unwrap().to_csv();
        ok &= verdict(
            &format!("library {family} {stat_arg} triangle is byte-identical to its fixture"),
            lib == fixture,
        );
        let out = Command::new(env!("CARGO_BIN_EXE_isochain"))
            .args([
                "table",
                "--family",
                family.cli_id(),
                "--stat",
                stat_arg,
                "--max-n",
                "7",
            ])
            .output()
            .unwrap();
        ok &= verdict(
            &format!("cli {family} {stat_arg} triangle is byte-identical to its fixture"),
            out.status.success() && out.stdout == fixture.as_bytes(),
        );
    }
    assert!(ok);
}

#[test]
fn closed_forms_match_brute_histograms() {
    let mut heights_ok = true;
    let mut fix_oddp_ok = true;
    let mut fix_ddp_ok = true;
    let mut parity_ok = true;
    let mut pascal_ok = true;
    let mut prev: Option<Vec<u64>> = None;
    for n in 0..=7u32 {
        let cs = ChainSize::new(n);
        let by_height = count_by_height(ODDP, cs, CEILING).unwrap();
        for p in 1..=n {
            heights_ok &= by_height[p as usize] == closed_height_oddp(n, p).unwrap()
                && closed_height_oddp(n, p).unwrap() == binomial(n + 1, p + 1);
        }
        if let Some(prev) = &prev {
            for p in 2..=n as usize {
                let carry = prev.get(p).copied().unwrap_or(0);
                pascal_ok &= by_height[p] == prev[p - 1] + carry;
            }
        }
        prev = Some(by_height);
        let oddp_fix = count_by_fix(ODDP, cs, CEILING).unwrap();
        for m in 1..=n {
            fix_oddp_ok &= oddp_fix[m as usize] == binomial(n, m)
                && closed_fix(ODDP, n, m).unwrap() == binomial(n, m);
        }
        let ddp_fix = count_by_fix(DDP, cs, CEILING).unwrap();
        for m in 2..=n {
            fix_ddp_ok &= ddp_fix[m as usize] == binomial(n, m)
                && closed_fix(DDP, n, m).unwrap() == binomial(n, m);
        }
        if n >= 1 {
            let single = ddp_fix[1];
            let closed = if n % 2 == 0 {
                (1u64 << (n / 2 + 1)) - 2
            } else {
                3 * (1u64 << (n / 2)) - 2
            };
            parity_ok &= single == closed && closed_fix(DDP, n, 1).unwrap() == closed;
        }
    }
    let ok = verdict(
        "oddp height counts equal binomial(n+1, p+1) for 1<=p<=n<=7",
        heights_ok,
    ) & verdict(
        "oddp fix counts equal binomial(n, m) for m>=1, n<=7",
        fix_oddp_ok,
    ) & verdict(
        "ddp fix counts equal binomial(n, m) for m>=2, n<=7",
        fix_ddp_ok,
    ) & verdict(
        "ddp single-fix counts match the even/odd closed forms, n<=7",
        parity_ok,
    ) & verdict(
        "height triangle satisfies the Pascal recurrence, n<=7",
        pascal_ok,
    );
    assert!(ok);
}

#[test]
fn fix_zero_column_counts_previous_chain() {
    let mut ok = true;
    for family in [DDP, ODDP, FamilyId::DecreasingInjective] {
        for n in 1..=7u32 {
            let column = count_by_fix(family, ChainSize::new(n), CEILING).unwrap()[0];
            let previous = order(family, ChainSize::new(n - 1), CEILING).unwrap();
            ok &= column == previous;
        }
    }
    assert!(verdict(
        "fix-free counts equal the order one chain point down (ddp/oddp/iminus, n=1..7)",
        ok,
    ));
}

#[test]
fn element_laws_hold_exhaustively() {
    let mut fix_values = true;
    let mut shift = true;
    let mut reflection = true;
    let mut boundary = true;
    let mut monotone = true;
    for n in 0..=7u32 {
        let all =
            enumerate_oracle(FamilyId::FullSymmetricInverse, ChainSize::new(n), CEILING).unwrap();
        for a in &all {
            if !a.is_isometry() {
                continue;
            }
            monotone &= a.is_order_preserving() || a.is_order_reversing();
            if n >= 1 && (a.apply(1) == Some(1) || a.apply(n) == Some(n)) {
                boundary &= a.is_partial_identity();
            }
            if !a.is_order_decreasing() {
                continue;
            }
            let stats = a.stats();
            fix_values &= stats.fix == 0 || stats.fix == 1 || stats.fix == stats.height;
            if a.is_order_preserving() {
                shift &= a
                    .pairs()
                    .windows(2)
                    .all(|w| w[0].0 - w[0].1 == w[1].0 - w[1].1);
            }
            let fixed = a.fixed_points();
            if fixed.len() == 1 {
                let i = fixed[0];
                reflection &= a.pairs().iter().all(|&(x, y)| x + y == 2 * i);
            }
        }
    }
    let ok = verdict("ddp fix counts lie in {0, 1, height} (n<=7)", fix_values)
        & verdict("oddp elements translate by a constant shift (n<=7)", shift)
        & verdict(
            "single-fix ddp elements reflect through their fixed point (n<=7)",
            reflection,
        )
        & verdict(
            "isometries fixing a chain endpoint are partial identities (n<=7)",
            boundary,
        )
        & verdict(
            "every isometry is order-preserving or order-reversing (n<=7)",
            monotone,
        );
    assert!(ok);
}

#[test]
fn structure_properties_hold_with_stored_witnesses() {
    let start = Instant::now();
    let mut ok = true;

    let mut j_trivial = true;
    for family in [DDP, ODDP] {
        for n in 0..=5u32 {
            j_trivial &= semigroup(family, n).is_j_trivial().unwrap();
        }
    }
    ok &= verdict("ddp and oddp are J-trivial for n<=5", j_trivial);

    let mut regular = true;
    let mut ample = true;
    for family in [DDP, ODDP] {
        for n in 0..=4u32 {
            let s = semigroup(family, n);
            regular &= s.is_regular() == (n <= 1);
            ample &= s.is_ample().unwrap();
        }
    }
    ok &= verdict(
        "ddp and oddp are regular exactly for n<=1 (checked n<=4)",
        regular,
    );
    ok &= verdict("ddp and oddp are ample for n<=4", ample);

    let mut zeu_oddp = true;
    for n in 0..=4u32 {
        zeu_oddp &= semigroup(ODDP, n).is_zero_e_unitary().0;
    }
    ok &= verdict("oddp is zero-E-unitary for n<=4", zeu_oddp);

    let ddp3 = semigroup(DDP, 3);
    let (zeu, witness) = ddp3.is_zero_e_unitary();
    ok &= verdict("ddp at n=3 is not zero-E-unitary", !zeu);
    let witness_matches = witness.is_some_and(|(e, s)| {
        ddp3.element(e) == &el("[n=3] 1->1 2->2") && ddp3.element(s) == &el("[n=3] 2->2 3->1")
    });
    ok &= verdict(
        "zero-E-unitary witness is exactly (1->1 2->2, 2->2 3->1)",
        witness_matches,
    );

    let oddp3 = semigroup(ODDP, 3);
    let (categorical, triple) = oddp3.is_categorical().unwrap();
    ok &= verdict("oddp at n=3 is not categorical", !categorical);
    let genuine = triple.is_some_and(|(a, b, c)| {
        let ab = oddp3.product_idx(a, b);
        let bc = oddp3.product_idx(b, c);
        ab != oddp3.zero_idx()
            && bc != oddp3.zero_idx()
            && oddp3.product_idx(ab, c) == oddp3.zero_idx()
    });
    ok &= verdict("categorical witness is a genuine violating triple", genuine);
    let reference = triple.is_some_and(|(a, b, c)| {
        oddp3.element(a) == &el("[n=3] 1->1 2->2")
            && oddp3.element(b) == &el("[n=3] 2->2 3->3")
            && oddp3.element(c) == &el("[n=3] 1->1 3->3")
    });
    ok &= verdict(
        "categorical witness equals the reference triple (1->1 2->2, 2->2 3->3, 1->1 3->3) \
         [known discrepancy: the canonical-first scan returns (1->1, 1->1 2->2, 2->1); no \
         nesting or direction over the canonical order reaches the reference triple first]",
        reference,
    );

    let mut quotients = true;
    for n in 1..=6u32 {
        for p in 1..=n {
            let q = rees_quotient(ChainSize::new(n), p, CEILING).unwrap();
            quotients &= q.is_zero_e_unitary().0 && q.is_categorical().unwrap().0;
        }
    }
    ok &= verdict(
        "height quotients are zero-E-unitary and categorical for 1<=p<=n<=6",
        quotients,
    );

    let report = PropertyReport::compute(&ddp3).unwrap();
    ok &= verdict(
        "property report agrees with the individual sweeps at ddp n=3",
        !report.regular && report.j_trivial && report.ample && !report.zero_e_unitary,
    );

    let elapsed = start.elapsed();
    ok &= verdict(
        &format!("structure suite finished in {elapsed:?} (< 60 s)"),
        elapsed.as_secs_f64() < 60.0,
    );
    assert!(
        ok,
        "a FAIL line above lists each unmet claim; the reference-triple equality is a \
         documented discrepancy, every other claim is expected to pass"
    );
}

#[test]
fn oracle_and_fast_enumeration_agree() {
    let mut sequences = true;
    for family in [DDP, ODDP] {
        for n in 0..=7u32 {
            let oracle = enumerate_oracle(family, ChainSize::new(n), CEILING).unwrap();
            let fast = enumerate_fast(family, ChainSize::new(n), CEILING).unwrap();
            sequences &= oracle == fast;
        }
    }
    let mut starred = true;
    for family in [DDP, ODDP] {
        for n in 0..=4u32 {
            let s = semigroup(family, n);
            for a in 0..s.len() {
                for b in 0..s.len() {
                    let same_im = s.element(a).image_sorted() == s.element(b).image_sorted();
                    let same_dom = s.element(a).domain().eq(s.element(b).domain());
                    starred &= s.lstar_related_equational(a, b) == same_im
                        && s.rstar_related_equational(a, b) == same_dom;
                }
            }
        }
    }
    let mut join = true;
    for n in 0..=5u32 {
        let s = semigroup(ODDP, n);
        let classes = s.dstar_join_classes();
        let mut ids = vec![0usize; s.len()];
        for (c, class) in classes.iter().enumerate() {
            for &m in class {
                ids[m] = c;
            }
        }
        for a in 0..s.len() {
            for b in 0..s.len() {
                let sym = leq_dstar(s.element(a), s.element(b)).unwrap()
                    && leq_dstar(s.element(b), s.element(a)).unwrap();
                join &= (ids[a] == ids[b]) == sym;
            }
        }
    }
    let ok = verdict(
        "fast and oracle enumerations coincide as canonical sequences (ddp/oddp, n<=7)",
        sequences,
    ) & verdict(
        "equational starred relations match image/domain equality (ddp/oddp, n<=4)",
        starred,
    ) & verdict(
        "symmetrized translate comparison equals the starred join (oddp, n<=5)",
        join,
    );
    assert!(ok);
}
