//! Command-line surface for the quaternionic polynomial kernel.
//!
//! Exit codes: 0 success (including `in`/`unknown` verdicts), 1 a boolean
//! predicate answered false (or a `not-in` verdict), 2 usage or parse
//! errors, 3 violated preconditions.

use std::collections::VecDeque;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use qstar::expr;
use qstar::{
    classify_point_ideal, divide_monic, factor_at_zero, member_of_ideal_of_finite_set,
    member_of_point_ideal, member_of_sphere_ideal, one_var_sphere_vanishing, phi, sample,
    vanishes_on_point_times_h, vanishes_on_sphere_times_point, vanishes_on_strip, CentralPoly,
    Error, IdealClass, Quaternion, RightIdeal, RingCtx, Sphere, StarPoly, Verdict,
};

// JSON output schemas, one struct per command shape; field order is the
// documented order.

#[derive(Serialize)]
struct ValueOut<'a> {
    value: &'a Quaternion,
}

#[derive(Serialize)]
struct PolyOut<'a> {
    poly: &'a StarPoly,
}

#[derive(Serialize)]
struct CentralOut<'a> {
    central: &'a CentralPoly,
}

#[derive(Serialize)]
struct DivOut<'a> {
    var: usize,
    quotient: &'a StarPoly,
    remainders: &'a [StarPoly],
}

#[derive(Serialize)]
struct FactorOut<'a> {
    point: &'a [Quaternion],
    factors: &'a [StarPoly],
}

#[derive(Serialize)]
struct ClassOut<'a> {
    classification: &'a str,
}

#[derive(Serialize)]
struct MemberOut {
    member: bool,
}

#[derive(Serialize)]
struct InOut {
    r#in: bool,
}

#[derive(Serialize)]
struct SymmetricOut {
    q1_symmetric: bool,
}

#[derive(Serialize)]
struct VanishesOut<'a> {
    vanishes: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness: Option<&'a StarPoly>,
}

#[derive(Serialize)]
struct SphereVanishesOut<'a> {
    vanishes: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness1: Option<&'a StarPoly>,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness2: Option<&'a StarPoly>,
}

#[derive(Serialize)]
#[serde(tag = "verdict", rename_all = "kebab-case")]
enum VerdictOut<'a> {
    In,
    NotIn {
        generator: usize,
        shift: &'a [u32],
        value: &'a Quaternion,
    },
    UnknownUpToBound {
        bound: u32,
    },
}

fn to_json<T: Serialize>(out: &T) -> String {
    serde_json::to_string(out).expect("serialization cannot fail")
}

#[derive(Parser)]
#[command(
    name = "qstar",
    version,
    about = "Exact computer algebra for slice regular quaternionic polynomials",
    after_help = "Polynomials use the grammar `q1^2*q2*(1/2 + i) + q2*k - 1`; `*` is always\n\
                  the *-product. Quaternion literals look like `3/2 + 1/3i - 2j + k`."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Common {
    /// Number of variables of the ring.
    #[arg(long)]
    nvars: usize,
    /// Emit machine-readable JSON on stdout.
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct ExprFile {
    /// Read the (first) polynomial expression from a file instead of an
    /// argument.
    #[arg(long)]
    file: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate a polynomial at a point: EXPR A1 ... An.
    Eval {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        file: ExprFile,
        #[arg(allow_hyphen_values = true)]
        args: Vec<String>,
    },
    /// *-product of two polynomials: EXPR1 EXPR2.
    Mul {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        file: ExprFile,
        #[arg(allow_hyphen_values = true)]
        args: Vec<String>,
    },
    /// Sum of two polynomials: EXPR1 EXPR2.
    Add {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        file: ExprFile,
        #[arg(allow_hyphen_values = true)]
        args: Vec<String>,
    },
    /// Regular conjugate (conjugate every coefficient): EXPR.
    Conj {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        file: ExprFile,
        #[arg(allow_hyphen_values = true)]
        args: Vec<String>,
    },
    /// Symmetrization P * conj(P): EXPR.
    Sym {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        file: ExprFile,
        #[arg(allow_hyphen_values = true)]
        args: Vec<String>,
    },
    /// Image in the central-variable ring (left coefficients): EXPR.
    Phi {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        file: ExprFile,
        #[arg(allow_hyphen_values = true)]
        args: Vec<String>,
    },
    /// Divide P by M, monic in variable q<VAR>: P M.
    Div {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        file: ExprFile,
        /// Division variable (1-based).
        #[arg(long)]
        var: usize,
        #[arg(allow_hyphen_values = true)]
        args: Vec<String>,
    },
    /// Factor P at a zero as sum of (q_k - a_k) * P_k: P A1 ... An.
    Factor {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        file: ExprFile,
        #[arg(allow_hyphen_values = true)]
        args: Vec<String>,
    },
    /// Vanishing predicates for structured subsets of H^n.
    Vanishes {
        #[command(subcommand)]
        set: VanishSet,
    },
    /// Classify the point ideal <q1-a1, ..., qn-an>: A1 ... An.
    IdealClassify {
        #[command(flatten)]
        common: Common,
        #[arg(allow_hyphen_values = true)]
        args: Vec<String>,
    },
    /// Ideal membership predicates.
    IdealMember {
        #[command(subcommand)]
        kind: MemberKind,
    },
    /// Does every generator vanish at a commuting point: GEN A1 ... An.
    InVc {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        file: ExprFile,
        /// Additional generators.
        #[arg(long = "gen")]
        gens: Vec<String>,
        #[arg(allow_hyphen_values = true)]
        args: Vec<String>,
    },
    /// Bounded variety membership verdict: GEN A1 ... An.
    InV {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        file: ExprFile,
        /// Total-degree bound for monomial shifts.
        #[arg(long, default_value_t = 4)]
        bound: u32,
        /// Additional generators.
        #[arg(long = "gen")]
        gens: Vec<String>,
        #[arg(allow_hyphen_values = true)]
        args: Vec<String>,
    },
    /// Certify S_a x {b} inside the variety at a non-commuting zero:
    /// GEN A B.
    SphereProbe {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        file: ExprFile,
        #[arg(long, default_value_t = 4)]
        bound: u32,
        /// Seed for the sampled cross-check.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Number of sampled sphere points.
        #[arg(long, default_value_t = 16)]
        samples: usize,
        /// Additional generators.
        #[arg(long = "gen")]
        gens: Vec<String>,
        #[arg(allow_hyphen_values = true)]
        args: Vec<String>,
    },
}

#[derive(Subcommand)]
enum VanishSet {
    /// H^{m-1} x {a} x (C_a)^{n-m} with m = VAR: EXPR.
    Strip {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        file: ExprFile,
        /// The pinned variable (1-based).
        #[arg(long)]
        var: usize,
        /// The pinned value a.
        #[arg(long, allow_hyphen_values = true)]
        at: String,
        #[arg(allow_hyphen_values = true)]
        args: Vec<String>,
    },
    /// {a} x H for non-real a (two variables): EXPR.
    PointTimesH {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        file: ExprFile,
        #[arg(long, allow_hyphen_values = true)]
        at: String,
        #[arg(allow_hyphen_values = true)]
        args: Vec<String>,
    },
    /// S_a x {b} (two variables): EXPR.
    SphereTimesPoint {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        file: ExprFile,
        /// The point a whose sphere is used.
        #[arg(long, allow_hyphen_values = true)]
        at: String,
        /// The pinned second coordinate b.
        #[arg(long, allow_hyphen_values = true)]
        point: String,
        #[arg(allow_hyphen_values = true)]
        args: Vec<String>,
    },
    /// The whole sphere S_a (one variable): EXPR.
    Sphere {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        file: ExprFile,
        #[arg(long, allow_hyphen_values = true)]
        at: String,
        #[arg(allow_hyphen_values = true)]
        args: Vec<String>,
    },
}

#[derive(Subcommand)]
enum MemberKind {
    /// The point ideal at a commuting point: EXPR A1 ... An.
    Point {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        file: ExprFile,
        #[arg(allow_hyphen_values = true)]
        args: Vec<String>,
    },
    /// The ideal of S_a x {b} (two variables): EXPR.
    Sphere {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        file: ExprFile,
        #[arg(long, allow_hyphen_values = true)]
        at: String,
        #[arg(long, allow_hyphen_values = true)]
        point: String,
        #[arg(allow_hyphen_values = true)]
        args: Vec<String>,
    },
    /// The intersection of point ideals over a finite commuting set:
    /// EXPR, with each zero passed as --zero "a1, a2, ...".
    FiniteSet {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        file: ExprFile,
        /// A zero with comma-separated components; repeatable.
        #[arg(long = "zero", required = true, allow_hyphen_values = true)]
        zeros: Vec<String>,
        #[arg(allow_hyphen_values = true)]
        args: Vec<String>,
    },
}

struct Failure {
    code: u8,
    message: String,
}

type CResult<T> = Result<T, Failure>;

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        code: 2,
        message: message.into(),
    }
}

fn kernel(e: Error) -> Failure {
    let code = match e {
        Error::RingMismatch { .. } | Error::ArityMismatch { .. } | Error::VarOutOfRange { .. } => 2,
        _ => 3,
    };
    Failure {
        code,
        message: e.to_string(),
    }
}

fn check_nvars(common: &Common) -> CResult<RingCtx> {
    if common.nvars == 0 {
        return Err(usage("--nvars must be at least 1"));
    }
    Ok(RingCtx::new(common.nvars))
}

/// The primary expression: from --file if given, else the next
/// positional argument.
fn take_expr_text(file: &ExprFile, args: &mut VecDeque<String>, what: &str) -> CResult<String> {
    match &file.file {
        Some(path) => std::fs::read_to_string(path)
            .map(|s| s.trim().to_string())
            .map_err(|e| usage(format!("cannot read {}: {e}", path.display()))),
        None => args
            .pop_front()
            .ok_or_else(|| usage(format!("missing {what} expression"))),
    }
}

fn parse_poly_arg(text: &str, nvars: usize) -> CResult<StarPoly> {
    let ast = expr::parse(text, nvars).map_err(|e| usage(format!("in `{text}`: {e}")))?;
    expr::lower(&ast, RingCtx::new(nvars)).map_err(|e| usage(e.to_string()))
}

fn parse_quaternion_arg(text: &str) -> CResult<Quaternion> {
    text.parse()
        .map_err(|e| usage(format!("invalid quaternion literal `{text}`: {e}")))
}

fn take_point(args: &mut VecDeque<String>, nvars: usize) -> CResult<Vec<Quaternion>> {
    if args.len() != nvars {
        return Err(usage(format!(
            "expected {nvars} point components, got {}",
            args.len()
        )));
    }
    args.drain(..).map(|s| parse_quaternion_arg(&s)).collect()
}

fn no_more(args: &VecDeque<String>) -> CResult<()> {
    if let Some(extra) = args.front() {
        return Err(usage(format!("unexpected argument `{extra}`")));
    }
    Ok(())
}

/// Collects the positional generator plus any --gen extras.
fn take_generators(
    file: &ExprFile,
    args: &mut VecDeque<String>,
    extra: &[String],
    nvars: usize,
) -> CResult<RightIdeal> {
    let mut gens = vec![parse_poly_arg(
        &take_expr_text(file, args, "generator")?,
        nvars,
    )?];
    for g in extra {
        gens.push(parse_poly_arg(g, nvars)?);
    }
    RightIdeal::new(gens).map_err(kernel)
}

/// Prints a boolean verdict (`out` is its JSON shape) and maps it onto
/// the exit code.
fn print_bool<T: Serialize>(common: &Common, out: &T, value: bool) -> u8 {
    if common.json {
        println!("{}", to_json(out));
    } else {
        println!("{value}");
    }
    u8::from(!value)
}

/// Parses the two operands of a binary polynomial command.
fn binary_operands(
    common: &Common,
    file: &ExprFile,
    args: Vec<String>,
) -> CResult<(StarPoly, StarPoly)> {
    let ctx = check_nvars(common)?;
    let mut args: VecDeque<String> = args.into();
    let a = parse_poly_arg(&take_expr_text(file, &mut args, "left")?, ctx.nvars())?;
    let b_text = args
        .pop_front()
        .ok_or_else(|| usage("missing right expression"))?;
    let b = parse_poly_arg(&b_text, ctx.nvars())?;
    no_more(&args)?;
    Ok((a, b))
}

/// Parses the single operand of a unary polynomial command.
fn unary_operand(common: &Common, file: &ExprFile, args: Vec<String>) -> CResult<StarPoly> {
    let ctx = check_nvars(common)?;
    let mut args: VecDeque<String> = args.into();
    let p = parse_poly_arg(&take_expr_text(file, &mut args, "polynomial")?, ctx.nvars())?;
    no_more(&args)?;
    Ok(p)
}

fn print_poly(common: &Common, p: &StarPoly) -> u8 {
    if common.json {
        println!("{}", to_json(&PolyOut { poly: p }));
    } else {
        println!("{p}");
    }
    0
}

fn dispatch(command: Command) -> CResult<u8> {
    match command {
        Command::Eval { common, file, args } => {
            let ctx = check_nvars(&common)?;
            let mut args: VecDeque<String> = args.into();
            let p = parse_poly_arg(
                &take_expr_text(&file, &mut args, "polynomial")?,
                ctx.nvars(),
            )?;
            let point = take_point(&mut args, ctx.nvars())?;
            let value = p.eval(&point).map_err(kernel)?;
            if common.json {
                println!("{}", to_json(&ValueOut { value: &value }));
            } else {
                println!("{value}");
            }
            Ok(0)
        }
        Command::Mul { common, file, args } => {
            let (a, b) = binary_operands(&common, &file, args)?;
            let p = a.star_mul(&b).map_err(kernel)?;
            Ok(print_poly(&common, &p))
        }
        Command::Add { common, file, args } => {
            let (a, b) = binary_operands(&common, &file, args)?;
            let p = a.add(&b).map_err(kernel)?;
            Ok(print_poly(&common, &p))
        }
        Command::Conj { common, file, args } => {
            let p = unary_operand(&common, &file, args)?.regular_conjugate();
            Ok(print_poly(&common, &p))
        }
        Command::Sym { common, file, args } => {
            let p = unary_operand(&common, &file, args)?.symmetrization();
            Ok(print_poly(&common, &p))
        }
        Command::Phi { common, file, args } => {
            let ctx = check_nvars(&common)?;
            let mut args: VecDeque<String> = args.into();
            let text = take_expr_text(&file, &mut args, "polynomial")?;
            no_more(&args)?;
            // accept a top-level phi(...) wrapper as well as a bare
            // star-polynomial expression
            let ast =
                expr::parse(&text, ctx.nvars()).map_err(|e| usage(format!("in `{text}`: {e}")))?;
            let inner = match ast {
                expr::Expr::Call(expr::Func::Phi, inner) => *inner,
                other => other,
            };
            let p = expr::lower(&inner, ctx).map_err(|e| usage(e.to_string()))?;
            let image = phi(&p);
            if common.json {
                println!("{}", to_json(&CentralOut { central: &image }));
            } else {
                println!("{image}");
            }
            Ok(0)
        }
        Command::Div {
            common,
            file,
            var,
            args,
        } => {
            let ctx = check_nvars(&common)?;
            if var == 0 || var > ctx.nvars() {
                return Err(usage(format!(
                    "--var must name a variable q1..q{}",
                    ctx.nvars()
                )));
            }
            let mut args: VecDeque<String> = args.into();
            let p = parse_poly_arg(&take_expr_text(&file, &mut args, "dividend")?, ctx.nvars())?;
            let m_text = args
                .pop_front()
                .ok_or_else(|| usage("missing divisor expression"))?;
            let m = parse_poly_arg(&m_text, ctx.nvars())?;
            no_more(&args)?;
            let div = divide_monic(&p, &m, var - 1).map_err(kernel)?;
            if common.json {
                println!(
                    "{}",
                    to_json(&DivOut {
                        var,
                        quotient: &div.quotient,
                        remainders: &div.remainders,
                    })
                );
            } else {
                println!("quotient: {}", div.quotient);
                for (k, r) in div.remainders.iter().enumerate() {
                    println!("r[{k}]: {r}");
                }
            }
            Ok(0)
        }
        Command::Factor { common, file, args } => {
            let ctx = check_nvars(&common)?;
            let mut args: VecDeque<String> = args.into();
            let p = parse_poly_arg(
                &take_expr_text(&file, &mut args, "polynomial")?,
                ctx.nvars(),
            )?;
            let point = take_point(&mut args, ctx.nvars())?;
            let f = factor_at_zero(&p, &point).map_err(kernel)?;
            if common.json {
                println!(
                    "{}",
                    to_json(&FactorOut {
                        point: &f.point,
                        factors: &f.factors,
                    })
                );
            } else {
                for (k, factor) in f.factors.iter().enumerate() {
                    println!("p[{}]: {factor}", k + 1);
                }
            }
            Ok(0)
        }
        Command::Vanishes { set } => dispatch_vanishes(set),
        Command::IdealClassify { common, args } => {
            let ctx = check_nvars(&common)?;
            let mut args: VecDeque<String> = args.into();
            let point = take_point(&mut args, ctx.nvars())?;
            let class = classify_point_ideal(&point);
            let name = match class {
                IdealClass::Maximal => "maximal",
                IdealClass::WholeRing => "whole-ring",
            };
            if common.json {
                println!(
                    "{}",
                    to_json(&ClassOut {
                        classification: name
                    })
                );
            } else {
                println!("{name}");
            }
            Ok(0)
        }
        Command::IdealMember { kind } => dispatch_member(kind),
        Command::InVc {
            common,
            file,
            gens,
            args,
        } => {
            let ctx = check_nvars(&common)?;
            let mut args: VecDeque<String> = args.into();
            let ideal = take_generators(&file, &mut args, &gens, ctx.nvars())?;
            let point = take_point(&mut args, ctx.nvars())?;
            let inside = ideal.contains_in_vc(&point).map_err(kernel)?;
            Ok(print_bool(&common, &InOut { r#in: inside }, inside))
        }
        Command::InV {
            common,
            file,
            bound,
            gens,
            args,
        } => {
            let ctx = check_nvars(&common)?;
            let mut args: VecDeque<String> = args.into();
            let ideal = take_generators(&file, &mut args, &gens, ctx.nvars())?;
            let point = take_point(&mut args, ctx.nvars())?;
            let verdict = ideal.in_variety_bounded(&point, bound).map_err(kernel)?;
            if common.json {
                let out = match &verdict {
                    Verdict::In => VerdictOut::In,
                    Verdict::NotIn(w) => VerdictOut::NotIn {
                        generator: w.generator + 1,
                        shift: &w.shift,
                        value: &w.value,
                    },
                    Verdict::UnknownUpToBound(d) => VerdictOut::UnknownUpToBound { bound: *d },
                };
                println!("{}", to_json(&out));
            } else {
                println!("{verdict}");
                if let Verdict::UnknownUpToBound(d) = &verdict {
                    println!(
                        "note: all shifted generators vanish at the point through total degree {d}"
                    );
                }
            }
            Ok(u8::from(matches!(verdict, Verdict::NotIn(_))))
        }
        Command::SphereProbe {
            common,
            file,
            bound,
            seed,
            samples,
            gens,
            args,
        } => {
            let ctx = check_nvars(&common)?;
            if ctx.nvars() != 2 {
                return Err(usage("sphere-probe requires --nvars 2"));
            }
            let mut args: VecDeque<String> = args.into();
            let ideal = take_generators(&file, &mut args, &gens, ctx.nvars())?;
            let point = take_point(&mut args, ctx.nvars())?;
            let conjugators = sample::conjugators(samples, seed);
            let symmetric = ideal
                .q1_symmetry_probe(&point, bound, &conjugators)
                .map_err(kernel)?;
            Ok(print_bool(
                &common,
                &SymmetricOut {
                    q1_symmetric: symmetric,
                },
                symmetric,
            ))
        }
    }
}

fn print_vanishes(common: &Common, witness: Option<&StarPoly>) -> u8 {
    let vanishes = witness.is_some();
    if common.json {
        println!("{}", to_json(&VanishesOut { vanishes, witness }));
    } else {
        println!("{vanishes}");
        if let Some(w) = witness {
            println!("witness: {w}");
        }
    }
    u8::from(!vanishes)
}

fn print_sphere_vanishes(common: &Common, witness: Option<&(StarPoly, StarPoly)>) -> u8 {
    let vanishes = witness.is_some();
    if common.json {
        println!(
            "{}",
            to_json(&SphereVanishesOut {
                vanishes,
                witness1: witness.map(|(w, _)| w),
                witness2: witness.map(|(_, w)| w),
            })
        );
    } else {
        println!("{vanishes}");
        if let Some((w1, w2)) = witness {
            println!("witness1: {w1}");
            println!("witness2: {w2}");
        }
    }
    u8::from(!vanishes)
}

fn dispatch_vanishes(set: VanishSet) -> CResult<u8> {
    match set {
        VanishSet::Strip {
            common,
            file,
            var,
            at,
            args,
        } => {
            let ctx = check_nvars(&common)?;
            if var == 0 || var > ctx.nvars() {
                return Err(usage(format!(
                    "--var must name a variable q1..q{}",
                    ctx.nvars()
                )));
            }
            let mut args: VecDeque<String> = args.into();
            let p = parse_poly_arg(
                &take_expr_text(&file, &mut args, "polynomial")?,
                ctx.nvars(),
            )?;
            no_more(&args)?;
            let a = parse_quaternion_arg(&at)?;
            let witness = vanishes_on_strip(&p, var - 1, &a).map_err(kernel)?;
            Ok(print_vanishes(&common, witness.as_ref()))
        }
        VanishSet::PointTimesH {
            common,
            file,
            at,
            args,
        } => {
            let ctx = check_nvars(&common)?;
            let mut args: VecDeque<String> = args.into();
            let p = parse_poly_arg(
                &take_expr_text(&file, &mut args, "polynomial")?,
                ctx.nvars(),
            )?;
            no_more(&args)?;
            let a = parse_quaternion_arg(&at)?;
            let witness = vanishes_on_point_times_h(&p, &a).map_err(kernel)?;
            Ok(print_vanishes(&common, witness.as_ref()))
        }
        VanishSet::SphereTimesPoint {
            common,
            file,
            at,
            point,
            args,
        } => {
            let ctx = check_nvars(&common)?;
            let mut args: VecDeque<String> = args.into();
            let p = parse_poly_arg(
                &take_expr_text(&file, &mut args, "polynomial")?,
                ctx.nvars(),
            )?;
            no_more(&args)?;
            let a = parse_quaternion_arg(&at)?;
            let b = parse_quaternion_arg(&point)?;
            let witness =
                vanishes_on_sphere_times_point(&p, &Sphere::of(&a), &b).map_err(kernel)?;
            Ok(print_sphere_vanishes(&common, witness.as_ref()))
        }
        VanishSet::Sphere {
            common,
            file,
            at,
            args,
        } => {
            let ctx = check_nvars(&common)?;
            let mut args: VecDeque<String> = args.into();
            let p = parse_poly_arg(
                &take_expr_text(&file, &mut args, "polynomial")?,
                ctx.nvars(),
            )?;
            no_more(&args)?;
            let a = parse_quaternion_arg(&at)?;
            let vanishes = one_var_sphere_vanishing(&p, &Sphere::of(&a)).map_err(kernel)?;
            Ok(print_bool(
                &common,
                &VanishesOut {
                    vanishes,
                    witness: None,
                },
                vanishes,
            ))
        }
    }
}

fn dispatch_member(kind: MemberKind) -> CResult<u8> {
    match kind {
        MemberKind::Point { common, file, args } => {
            let ctx = check_nvars(&common)?;
            let mut args: VecDeque<String> = args.into();
            let p = parse_poly_arg(
                &take_expr_text(&file, &mut args, "polynomial")?,
                ctx.nvars(),
            )?;
            let point = take_point(&mut args, ctx.nvars())?;
            let member = member_of_point_ideal(&p, &point).map_err(kernel)?;
            Ok(print_bool(&common, &MemberOut { member }, member))
        }
        MemberKind::Sphere {
            common,
            file,
            at,
            point,
            args,
        } => {
            let ctx = check_nvars(&common)?;
            let mut args: VecDeque<String> = args.into();
            let p = parse_poly_arg(
                &take_expr_text(&file, &mut args, "polynomial")?,
                ctx.nvars(),
            )?;
            no_more(&args)?;
            let a = parse_quaternion_arg(&at)?;
            let b = parse_quaternion_arg(&point)?;
            let member = member_of_sphere_ideal(&p, &Sphere::of(&a), &b).map_err(kernel)?;
            Ok(print_bool(&common, &MemberOut { member }, member))
        }
        MemberKind::FiniteSet {
            common,
            file,
            zeros,
            args,
        } => {
            let ctx = check_nvars(&common)?;
            let mut args: VecDeque<String> = args.into();
            let p = parse_poly_arg(
                &take_expr_text(&file, &mut args, "polynomial")?,
                ctx.nvars(),
            )?;
            no_more(&args)?;
            let mut points = Vec::new();
            for z in &zeros {
                let components: Vec<Quaternion> = z
                    .split(',')
                    .map(parse_quaternion_arg)
                    .collect::<CResult<_>>()?;
                if components.len() != ctx.nvars() {
                    return Err(usage(format!(
                        "zero `{z}` has {} components, expected {}",
                        components.len(),
                        ctx.nvars()
                    )));
                }
                points.push(components);
            }
            let member = member_of_ideal_of_finite_set(&p, &points).map_err(kernel)?;
            Ok(print_bool(&common, &MemberOut { member }, member))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
