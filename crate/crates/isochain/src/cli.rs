//! Command-line surface: enumeration, counting, table emission, structure
//! reports, quotient checks, and the named verification suites.
//!
//! Exit codes: 0 on success and when every requested check passes, 1 when a
//! verification or quotient check fails (the offending witness is printed),
//! 2 on usage errors, including enumeration-ceiling violations.

use std::collections::HashMap;

use clap::{Parser, Subcommand, ValueEnum};
use itertools::Itertools;

use isochain::algebra::{
    build_semigroup, leq_dstar, rees_quotient, FiniteSemigroup, GreensRelation, PropertyReport,
};
use isochain::counting::{
    closed_fix, closed_height_oddp, closed_order_ddp, closed_order_oddp, count_by_fix,
    count_by_height, order, triangle, StatKind,
};
use isochain::element::{ChainSize, PartialInjection};
use isochain::error::Error;
use isochain::family::{enumerate_fast, enumerate_oracle, FamilyId, DEFAULT_CEILING};

const ODDP: FamilyId = FamilyId::OrderPreservingDecreasingIsometry;
const DDP: FamilyId = FamilyId::DecreasingIsometry;

#[derive(Parser)]
#[command(
    name = "isochain",
    version,
    about = "Exact enumeration and verification of order-decreasing partial isometries of a finite chain"
)]
pub struct Cli {
    /// Largest chain size the enumerators accept.
    #[arg(
        long,
        global = true,
        env = "ISOCHAIN_CEILING",
        default_value_t = DEFAULT_CEILING
    )]
    ceiling: u32,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Stream the elements of a family in canonical order.
    Enumerate {
        #[arg(long, value_parser = parse_family)]
        family: FamilyId,
        /// Chain size.
        #[arg(short)]
        n: u32,
        #[arg(long, value_enum, default_value_t = ElementFormat::Text)]
        format: ElementFormat,
        /// Use the structural generator instead of the filter oracle.
        #[arg(long)]
        fast: bool,
    },
    /// Print a histogram (by height or fixed points) or the order.
    Count {
        #[arg(long, value_parser = parse_family)]
        family: FamilyId,
        #[arg(short)]
        n: u32,
        #[arg(long, value_enum)]
        by: CountBy,
    },
    /// Emit the triangle of counts for chains 0..=max-n.
    Table {
        #[arg(long, value_parser = parse_family)]
        family: FamilyId,
        #[arg(long, value_enum)]
        stat: StatArg,
        #[arg(long)]
        max_n: u32,
        #[arg(long, value_enum, default_value_t = TableFormat::Csv)]
        format: TableFormat,
    },
    /// Print Green's class partitions, or the starred partitions.
    Greens {
        #[arg(long, value_parser = parse_family)]
        family: FamilyId,
        #[arg(short)]
        n: u32,
        #[arg(long)]
        starred: bool,
    },
    /// Print the full structural property report.
    Props {
        #[arg(long, value_parser = parse_family)]
        family: FamilyId,
        #[arg(short)]
        n: u32,
        #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
        format: ReportFormat,
    },
    /// Build the height quotient and optionally run its checks.
    Quotient {
        #[arg(short)]
        n: u32,
        /// Height of the slice.
        #[arg(short)]
        p: u32,
        /// Verify associativity and both zero properties; exit 1 on failure.
        #[arg(long)]
        check: bool,
    },
    /// Run named invariant suites; exit 1 if any check fails.
    Verify {
        #[arg(long, value_enum, default_value_t = SuiteArg::All)]
        suite: SuiteArg,
        #[arg(long, default_value_t = 6)]
        max_n: u32,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum ElementFormat {
    Text,
    Json,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum CountBy {
    Height,
    Fix,
    Order,
}

#[derive(Clone, Copy, ValueEnum)]
enum StatArg {
    Height,
    Fix,
}

#[derive(Clone, Copy, ValueEnum)]
enum TableFormat {
    Csv,
    Text,
}

#[derive(Clone, Copy, ValueEnum)]
enum ReportFormat {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    Lemmas,
    Formulas,
    Greens,
    Structure,
    All,
}

fn parse_family(s: &str) -> Result<FamilyId, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

/// Runs the parsed command and returns the process exit code.
pub fn run(cli: Cli) -> Result<i32, Error> {
    let ceiling = cli.ceiling;
    match cli.command {
        Command::Enumerate {
            family,
            n,
            format,
            fast,
        } => {
            let n = ChainSize::new(n);
            let elements = if fast {
                enumerate_fast(family, n, ceiling)?
            } else {
                enumerate_oracle(family, n, ceiling)?
            };
            print_elements(&elements, n, format);
            Ok(0)
        }
        Command::Count { family, n, by } => {
            let n = ChainSize::new(n);
            match by {
                CountBy::Height => {
                    println!("{}", join_counts(&count_by_height(family, n, ceiling)?))
                }
                CountBy::Fix => println!("{}", join_counts(&count_by_fix(family, n, ceiling)?)),
                CountBy::Order => println!("{}", order(family, n, ceiling)?),
            }
            Ok(0)
        }
        Command::Table {
            family,
            stat,
            max_n,
            format,
        } => {
            let stat = match stat {
                StatArg::Height => StatKind::Height,
                StatArg::Fix => StatKind::Fix,
            };
            let t = triangle(family, stat, max_n, ceiling)?;
            match format {
                TableFormat::Csv => print!("{}", t.to_csv()),
                TableFormat::Text => print!("{}", t.to_text()),
            }
            Ok(0)
        }
        Command::Greens { family, n, starred } => {
            let s = build_semigroup(family, ChainSize::new(n), ceiling)?;
            if starred {
                print_partition(&s, "Lstar", &s.lstar_classes());
                print_partition(&s, "Rstar", &s.rstar_classes());
                print_partition(&s, "Hstar", &s.hstar_classes());
                print_partition(&s, "Dstar", &s.dstar_join_classes());
            } else {
                for rel in GreensRelation::ALL {
                    print_partition(&s, &rel.to_string(), &s.greens_classes(rel)?);
                }
            }
            Ok(0)
        }
        Command::Props { family, n, format } => {
            let s = build_semigroup(family, ChainSize::new(n), ceiling)?;
            let report = PropertyReport::compute(&s)?;
            match format {
                ReportFormat::Text => print!("{report}"),
                ReportFormat::Json => {
                    println!(
                        "{}",
                        serde_json::to_string(&report).expect("report serializes")
                    )
                }
            }
            Ok(0)
        }
        Command::Quotient { n, p, check } => {
            let q = rees_quotient(ChainSize::new(n), p, ceiling)?;
            println!("n={n} p={p} nonzero={}", q.nonzero_elements().len());
            if !check {
                return Ok(0);
            }
            let associative = q.verify_associativity();
            let (zero_e_unitary, zeu_witness) = q.is_zero_e_unitary();
            let (categorical, cat_witness) = q.is_categorical()?;
            println!("associative={associative}");
            print!("zero_e_unitary={zero_e_unitary}");
            if let Some((e, s)) = zeu_witness {
                print!(
                    " witness_e={} witness_s={}",
                    q.element_text(e),
                    q.element_text(s)
                );
            }
            println!();
            print!("categorical={categorical}");
            if let Some((a, b, c)) = cat_witness {
                print!(
                    " witness_a={} witness_b={} witness_c={}",
                    q.element_text(a),
                    q.element_text(b),
                    q.element_text(c)
                );
            }
            println!();
            Ok(if associative && zero_e_unitary && categorical {
                0
            } else {
                1
            })
        }
        Command::Verify { suite, max_n } => {
            let mut checks = Vec::new();
            match suite {
                SuiteArg::Lemmas => checks.extend(lemma_suite(max_n, ceiling)?),
                SuiteArg::Formulas => checks.extend(formula_suite(max_n, ceiling)?),
                SuiteArg::Greens => checks.extend(greens_suite(max_n, ceiling)?),
                SuiteArg::Structure => checks.extend(structure_suite(max_n, ceiling)?),
                SuiteArg::All => {
                    checks.extend(lemma_suite(max_n, ceiling)?);
                    checks.extend(formula_suite(max_n, ceiling)?);
                    checks.extend(greens_suite(max_n, ceiling)?);
                    checks.extend(structure_suite(max_n, ceiling)?);
                }
            }
            let mut failed = 0usize;
            for check in &checks {
                match &check.fail {
                    None => println!("ok {} ({})", check.name, check.scope),
                    Some(detail) => {
                        failed += 1;
                        println!("FAIL {} ({}): {detail}", check.name, check.scope);
                    }
                }
            }
            println!("passed {}/{}", checks.len() - failed, checks.len());
            Ok(if failed == 0 { 0 } else { 1 })
        }
    }
}

fn print_elements(elements: &[PartialInjection], n: ChainSize, format: ElementFormat) {
    match format {
        ElementFormat::Text => {
            for el in elements {
                println!("{el}");
            }
        }
        ElementFormat::Json => {
            for el in elements {
                println!("{}", serde_json::to_string(el).expect("element serializes"));
            }
        }
        ElementFormat::Csv => {
            println!("n,height,pairs");
            for el in elements {
                let pairs = el
                    .pairs()
                    .iter()
                    .map(|&(x, y)| format!("{x}->{y}"))
                    .join(" ");
                println!("{},{},{pairs}", n.get(), el.height());
            }
        }
    }
}

fn join_counts(counts: &[u64]) -> String {
    counts.iter().map(u64::to_string).join(" ")
}

fn print_partition(s: &FiniteSemigroup, label: &str, classes: &[Vec<usize>]) {
    println!("relation={label} classes={}", classes.len());
    for class in classes {
        let members = class.iter().map(|&i| s.element(i).to_string()).join(", ");
        println!("{{{members}}}");
    }
}

/// One named verification check: the scope it swept and the first failure
/// found, if any.
struct Check {
    name: &'static str,
    scope: String,
    fail: Option<String>,
}

struct SuiteAcc {
    checks: Vec<(&'static str, String)>,
    fails: HashMap<&'static str, String>,
}

impl SuiteAcc {
    fn new() -> Self {
        Self {
            checks: Vec::new(),
            fails: HashMap::new(),
        }
    }

    fn declare(&mut self, name: &'static str, scope: String) {
        self.checks.push((name, scope));
    }

    fn fail(&mut self, name: &'static str, detail: String) {
        self.fails.entry(name).or_insert(detail);
    }

    fn ensure(&mut self, name: &'static str, ok: bool, detail: impl Fn() -> String) {
        if !ok {
            self.fail(name, detail());
        }
    }

    fn finish(mut self) -> Vec<Check> {
        self.checks
            .drain(..)
            .map(|(name, scope)| Check {
                name,
                scope,
                fail: self.fails.remove(name),
            })
            .collect()
    }
}

/// Element-level laws swept over full enumerations.
fn lemma_suite(max_n: u32, ceiling: u32) -> Result<Vec<Check>, Error> {
    let cap = max_n.min(7);
    let mut acc = SuiteAcc::new();
    acc.declare("fix_count_values", format!("ddp, n<={cap}"));
    acc.declare("fixed_point_prefix", format!("ddp, n<={cap}"));
    acc.declare("single_fix_domain_window", format!("ddp, n<={cap}"));
    acc.declare("single_fix_reflection_sum", format!("ddp, n<={cap}"));
    acc.declare("constant_shift", format!("oddp, n<={cap}"));
    acc.declare("boundary_fix_partial_identity", format!("dp, n<={cap}"));
    acc.declare("preserving_or_reversing", format!("dp, n<={cap}"));
    acc.declare("top_point_fixed", format!("odp, n<={cap}"));
    acc.declare("positive_fix_idempotent", format!("odp, n<={cap}"));
    acc.declare("fast_enumeration_agrees", format!("ddp/oddp, n<={cap}"));
    for n in 0..=cap {
        let all = enumerate_oracle(FamilyId::FullSymmetricInverse, ChainSize::new(n), ceiling)?;
        for el in &all {
            if !el.is_isometry() {
                continue;
            }
            let stats = el.stats();
            let decreasing = el.is_order_decreasing();
            let preserving = el.is_order_preserving();
            acc.ensure(
                "preserving_or_reversing",
                preserving || el.is_order_reversing(),
                || format!("{el}"),
            );
            if n >= 1 && (el.apply(1) == Some(1) || el.apply(n) == Some(n)) {
                acc.ensure(
                    "boundary_fix_partial_identity",
                    el.is_partial_identity(),
                    || format!("{el}"),
                );
            }
            if preserving {
                if n >= 1 && el.apply(n).is_some() && el.image_sorted().contains(&n) {
                    acc.ensure("top_point_fixed", el.apply(n) == Some(n), || {
                        format!("{el}")
                    });
                }
                if stats.fix >= 1 {
                    acc.ensure("positive_fix_idempotent", el.is_idempotent(), || {
                        format!("{el}")
                    });
                }
            }
            if decreasing {
                acc.ensure(
                    "fix_count_values",
                    stats.fix == 0 || stats.fix == 1 || stats.fix == stats.height,
                    || format!("{el}"),
                );
                let fixed = el.fixed_points();
                for &i in &fixed {
                    acc.ensure(
                        "fixed_point_prefix",
                        el.pairs().iter().all(|&(x, y)| x >= i || y == x),
                        || format!("{el} at fixed point {i}"),
                    );
                }
                if fixed.len() == 1 {
                    let i = fixed[0];
                    acc.ensure(
                        "single_fix_domain_window",
                        el.pairs().iter().all(|&(x, _)| x >= i),
                        || format!("{el}"),
                    );
                    acc.ensure(
                        "single_fix_reflection_sum",
                        el.pairs().iter().all(|&(x, y)| x + y == 2 * i),
                        || format!("{el}"),
                    );
                }
                if preserving {
                    let shifts: Vec<i64> = el
                        .pairs()
                        .iter()
                        .map(|&(x, y)| i64::from(x) - i64::from(y))
                        .collect();
                    acc.ensure(
                        "constant_shift",
                        shifts.windows(2).all(|w| w[0] == w[1]),
                        || format!("{el}"),
                    );
                }
            }
        }
        for family in [DDP, ODDP] {
            let filtered: Vec<PartialInjection> =
                all.iter().filter(|el| family.member(el)).cloned().collect();
            let fast = enumerate_fast(family, ChainSize::new(n), ceiling)?;
            acc.ensure("fast_enumeration_agrees", fast == filtered, || {
                format!(
                    "{family} n={n}: {} vs {} elements",
                    fast.len(),
                    filtered.len()
                )
            });
        }
    }
    Ok(acc.finish())
}

/// Closed forms, recurrences, and column identities against brute counts.
fn formula_suite(max_n: u32, ceiling: u32) -> Result<Vec<Check>, Error> {
    let cap = max_n.min(7);
    let mut acc = SuiteAcc::new();
    acc.declare("order_closed_form_oddp", format!("n<={cap}"));
    acc.declare("order_recurrence_ddp", format!("n<={cap}"));
    acc.declare("height_counts_binomial", format!("oddp, n<={cap}"));
    acc.declare("height_pascal_recurrence", format!("oddp, 2<=p<=n<={cap}"));
    acc.declare("fix_counts_closed_oddp", format!("n<={cap}"));
    acc.declare("fix_counts_closed_ddp", format!("n<={cap}"));
    acc.declare(
        "fix_zero_equals_previous_order",
        format!("ddp/oddp/iminus, 1<=n<={cap}"),
    );
    acc.declare("row_sums_equal_order", format!("ddp/oddp, n<={cap}"));
    let mut prev_height: Option<Vec<u64>> = None;
    for n in 0..=cap {
        let cs = ChainSize::new(n);
        let oddp_h = count_by_height(ODDP, cs, ceiling)?;
        let oddp_f = count_by_fix(ODDP, cs, ceiling)?;
        let ddp_f = count_by_fix(DDP, cs, ceiling)?;
        let ddp_h = count_by_height(DDP, cs, ceiling)?;
        let oddp_total: u64 = oddp_h.iter().sum();
        let ddp_total: u64 = ddp_h.iter().sum();
        acc.ensure(
            "order_closed_form_oddp",
            oddp_total == closed_order_oddp(n),
            || format!("n={n}: {oddp_total} vs {}", closed_order_oddp(n)),
        );
        acc.ensure(
            "order_recurrence_ddp",
            ddp_total == closed_order_ddp(n),
            || format!("n={n}: {ddp_total} vs {}", closed_order_ddp(n)),
        );
        for p in 0..=n {
            let closed = closed_height_oddp(n, p)?;
            acc.ensure(
                "height_counts_binomial",
                oddp_h[p as usize] == closed,
                || format!("n={n} p={p}: {} vs {closed}", oddp_h[p as usize]),
            );
        }
        if let Some(prev) = &prev_height {
            for p in 2..=n as usize {
                let carry = prev.get(p).copied().unwrap_or(0);
                acc.ensure(
                    "height_pascal_recurrence",
                    oddp_h[p] == prev[p - 1] + carry,
                    || format!("n={n} p={p}"),
                );
            }
        }
        for m in 0..=n {
            let closed = closed_fix(ODDP, n, m)?;
            acc.ensure(
                "fix_counts_closed_oddp",
                oddp_f[m as usize] == closed,
                || format!("n={n} m={m}: {} vs {closed}", oddp_f[m as usize]),
            );
            let closed = closed_fix(DDP, n, m)?;
            acc.ensure("fix_counts_closed_ddp", ddp_f[m as usize] == closed, || {
                format!("n={n} m={m}: {} vs {closed}", ddp_f[m as usize])
            });
        }
        if n >= 1 {
            for family in [DDP, ODDP, FamilyId::DecreasingInjective] {
                let column = count_by_fix(family, cs, ceiling)?[0];
                let previous = order(family, ChainSize::new(n - 1), ceiling)?;
                acc.ensure("fix_zero_equals_previous_order", column == previous, || {
                    format!("{family} n={n}: {column} vs {previous}")
                });
            }
        }
        let oddp_f_total: u64 = oddp_f.iter().sum();
        let ddp_f_total: u64 = ddp_f.iter().sum();
        acc.ensure(
            "row_sums_equal_order",
            oddp_f_total == oddp_total && ddp_f_total == ddp_total,
            || format!("n={n}"),
        );
        prev_height = Some(oddp_h);
    }
    Ok(acc.finish())
}

/// Green's relations, their triviality, and the starred cross-checks.
fn greens_suite(max_n: u32, ceiling: u32) -> Result<Vec<Check>, Error> {
    let cap5 = max_n.min(5);
    let cap4 = max_n.min(4);
    let mut acc = SuiteAcc::new();
    acc.declare("greens_classes_trivial", format!("ddp/oddp, n<={cap5}"));
    acc.declare("j_trivial", format!("ddp/oddp, n<={cap5}"));
    acc.declare("full_monoid_not_j_trivial", "i, n=2".to_string());
    acc.declare("starred_match_containment", format!("ddp/oddp, n<={cap4}"));
    acc.declare("dstar_join_matches_translates", format!("oddp, n<={cap5}"));
    for family in [DDP, ODDP] {
        for n in 0..=cap5 {
            let s = build_semigroup(family, ChainSize::new(n), ceiling)?;
            for rel in GreensRelation::ALL {
                let classes = s.greens_classes(rel)?;
                acc.ensure(
                    "greens_classes_trivial",
                    classes.iter().all(|c| c.len() == 1),
                    || format!("{family} n={n} relation {rel}"),
                );
            }
            acc.ensure("j_trivial", s.is_j_trivial()?, || format!("{family} n={n}"));
        }
    }
    let i2 = build_semigroup(FamilyId::FullSymmetricInverse, ChainSize::new(2), ceiling)?;
    acc.ensure("full_monoid_not_j_trivial", !i2.is_j_trivial()?, || {
        "i n=2 reported J-trivial".to_string()
    });
    for family in [DDP, ODDP] {
        for n in 0..=cap4 {
            let s = build_semigroup(family, ChainSize::new(n), ceiling)?;
            for a in 0..s.len() {
                for b in 0..s.len() {
                    let same_im = s.element(a).image_sorted() == s.element(b).image_sorted();
                    let same_dom = s.element(a).domain().eq(s.element(b).domain());
                    acc.ensure(
                        "starred_match_containment",
                        s.lstar_related_equational(a, b) == same_im
                            && s.rstar_related_equational(a, b) == same_dom,
                        || format!("{family} n={n}: {} vs {}", s.element(a), s.element(b)),
                    );
                }
            }
        }
    }
    for n in 0..=cap5 {
        let s = build_semigroup(ODDP, ChainSize::new(n), ceiling)?;
        let join = s.dstar_join_classes();
        let mut ids = vec![0usize; s.len()];
        for (c, class) in join.iter().enumerate() {
            for &m in class {
                ids[m] = c;
            }
        }
        for a in 0..s.len() {
            for b in 0..s.len() {
                let sym = leq_dstar(s.element(a), s.element(b))?
                    && leq_dstar(s.element(b), s.element(a))?;
                acc.ensure(
                    "dstar_join_matches_translates",
                    (ids[a] == ids[b]) == sym,
                    || format!("n={n}: {} vs {}", s.element(a), s.element(b)),
                );
            }
        }
    }
    Ok(acc.finish())
}

/// Regularity, abundance chain, idempotent shape, zero properties, and
/// quotient checks.
fn structure_suite(max_n: u32, ceiling: u32) -> Result<Vec<Check>, Error> {
    let cap4 = max_n.min(4);
    let cap6 = max_n.min(6);
    let mut acc = SuiteAcc::new();
    acc.declare("regular_exactly_below_two", format!("ddp/oddp, n<={cap4}"));
    acc.declare(
        "nonregular_witness_genuine",
        format!("ddp/oddp, 2<=n<={cap4}"),
    );
    acc.declare("ample_chain", format!("ddp/oddp, n<={cap4}"));
    acc.declare(
        "idempotents_are_partial_identities",
        format!("ddp/oddp, n<={cap4}"),
    );
    acc.declare("zero_e_unitary_oddp", format!("n<={cap6}"));
    acc.declare("zero_e_unitary_fails_ddp", format!("3<=n<={cap6}"));
    acc.declare(
        "zero_e_unitary_witness_minimal_chain",
        "ddp, n=3".to_string(),
    );
    acc.declare("categorical_fails_oddp", format!("3<=n<={cap6}"));
    acc.declare("categorical_failure_example", "oddp, n=3".to_string());
    acc.declare("quotient_zero_properties", format!("1<=p<=n<={cap6}"));
    for family in [DDP, ODDP] {
        for n in 0..=cap4 {
            let s = build_semigroup(family, ChainSize::new(n), ceiling)?;
            let witness = s.first_nonregular();
            acc.ensure(
                "regular_exactly_below_two",
                witness.is_none() == (n <= 1),
                || format!("{family} n={n}"),
            );
            if let Some(a) = witness {
                let genuine = (0..s.len()).all(|x| s.product_idx(s.product_idx(a, x), a) != a);
                acc.ensure("nonregular_witness_genuine", genuine, || {
                    format!("{family} n={n}: {}", s.element(a))
                });
            }
            acc.ensure(
                "ample_chain",
                s.is_abundant()? && s.is_adequate()? && s.is_ample()?,
                || format!("{family} n={n}"),
            );
            let idems = s.idempotent_indices();
            let all_partial_identities = idems.iter().all(|&i| s.element(i).is_partial_identity());
            acc.ensure(
                "idempotents_are_partial_identities",
                all_partial_identities && idems.len() == 1usize << n,
                || format!("{family} n={n}: {} idempotents", idems.len()),
            );
        }
    }
    for n in 0..=cap6 {
        let s = build_semigroup(ODDP, ChainSize::new(n), ceiling)?;
        let (ok, _) = s.is_zero_e_unitary();
        acc.ensure("zero_e_unitary_oddp", ok, || format!("n={n}"));
    }
    for n in 3..=cap6 {
        let s = build_semigroup(DDP, ChainSize::new(n), ceiling)?;
        let (ok, witness) = s.is_zero_e_unitary();
        acc.ensure("zero_e_unitary_fails_ddp", !ok, || format!("n={n}"));
        if let Some((e, v)) = witness {
            let es = s.product_idx(e, v);
            let genuine = s.is_idempotent_idx(e)
                && e != s.zero_idx()
                && !s.is_idempotent_idx(v)
                && es != s.zero_idx()
                && s.is_idempotent_idx(es);
            acc.ensure("zero_e_unitary_fails_ddp", genuine, || {
                format!("n={n}: witness ({}, {})", s.element(e), s.element(v))
            });
            if n == 3 {
                let expect_e = "[n=3] 1->1 2->2".parse::<PartialInjection>().unwrap();
                let expect_s = "[n=3] 2->2 3->1".parse::<PartialInjection>().unwrap();
                acc.ensure(
                    "zero_e_unitary_witness_minimal_chain",
                    s.element(e) == &expect_e && s.element(v) == &expect_s,
                    || format!("got ({}, {})", s.element(e), s.element(v)),
                );
            }
        }
    }
    for n in 3..=cap6 {
        let s = build_semigroup(ODDP, ChainSize::new(n), ceiling)?;
        let (ok, witness) = s.is_categorical()?;
        acc.ensure("categorical_fails_oddp", !ok, || format!("n={n}"));
        if let Some((a, b, c)) = witness {
            let ab = s.product_idx(a, b);
            let bc = s.product_idx(b, c);
            let genuine =
                ab != s.zero_idx() && bc != s.zero_idx() && s.product_idx(ab, c) == s.zero_idx();
            acc.ensure("categorical_fails_oddp", genuine, || {
                format!(
                    "n={n}: witness ({}, {}, {})",
                    s.element(a),
                    s.element(b),
                    s.element(c)
                )
            });
        }
    }
    if cap6 >= 3 {
        let s = build_semigroup(ODDP, ChainSize::new(3), ceiling)?;
        let p = s.index_of(&"[n=3] 1->1 2->2".parse().unwrap()).unwrap();
        let t = s.index_of(&"[n=3] 2->2 3->3".parse().unwrap()).unwrap();
        let q = s.index_of(&"[n=3] 1->1 3->3".parse().unwrap()).unwrap();
        let pt = s.product_idx(p, t);
        let tq = s.product_idx(t, q);
        acc.ensure(
            "categorical_failure_example",
            pt != s.zero_idx() && tq != s.zero_idx() && s.product_idx(pt, q) == s.zero_idx(),
            || "displayed triple does not violate".to_string(),
        );
    }
    for n in 1..=cap6 {
        for p in 1..=n {
            let q = rees_quotient(ChainSize::new(n), p, ceiling)?;
            let (zeu, _) = q.is_zero_e_unitary();
            let (cat, _) = q.is_categorical()?;
            acc.ensure(
                "quotient_zero_properties",
                q.verify_associativity() && zeu && cat,
                || format!("n={n} p={p}"),
            );
        }
    }
    Ok(acc.finish())
}
