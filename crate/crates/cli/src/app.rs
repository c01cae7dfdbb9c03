//! Argument definitions and subcommand dispatch.

use std::fmt::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_traits::One;
use padic_dyn::backward::{
    backward_tree, distance_first_difference, distance_series, forward_orbit, preimages,
    DEFAULT_MAX_NODES,
};
use padic_dyn::congruence::{roots_mod_p, solve_congruence_bruteforce};
use padic_dyn::hensel::lift_preimage;
use padic_dyn::padic::{abs_p, vp_rat, RatValuation};
use padic_dyn::poly::IntPoly;
use padic_dyn::{BigInt, BigRational, BigUint, Prime};
use thiserror::Error;

use crate::dot::tree_to_dot;
use crate::json::{self, coeffs, dec, fp_coeffs, Root};
use crate::parse::{parse_int, parse_int_list, parse_poly};

const GRAMMAR: &str = "\
Polynomials are written in x with integer coefficients: `x^2 - 7x + 2`, `(x+1)^2`, `3*x^4 - x`.
`^` binds tighter than multiplication (explicit `*` or juxtaposition before `x` or `(`),
which binds tighter than `+` and `-`. Unary minus is allowed. Exponents are integer literals
up to 10000. Products and powers are expanded at parse time.

Exit status: 0 on success, 1 for domain errors (composite prime, singular or non-root seed,
node budget exhausted, modulus limits), 2 for usage errors.";

#[derive(Debug, Parser)]
#[command(name = "padic-dyn", version, about = "Backward orbits of integer polynomials over Z_p", after_help = GRAMMAR)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    pub format: Format,

    /// Largest allowed bit length of p^k for lifting, trees and orbits.
    #[arg(long, global = true, default_value_t = 256)]
    pub max_modulus_bits: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Json,
    Dot,
}

#[derive(Debug, Args)]
pub struct PolyPrime {
    /// Polynomial in x, e.g. "x^2 - 2".
    #[arg(long, value_parser = poly_arg)]
    pub poly: IntPoly,
    #[arg(long, value_parser = parse_int)]
    pub prime: BigInt,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Solutions of f(x) ≡ target (mod p), classified singular or nonsingular.
    Roots {
        #[command(flatten)]
        common: PolyPrime,
        #[arg(long, value_parser = parse_int, default_value = "0")]
        target: BigInt,
    },
    /// All solutions of f(x) ≡ target (mod m) by exhaustive search; m may be composite.
    Oracle {
        #[arg(long, value_parser = poly_arg)]
        poly: IntPoly,
        #[arg(long, value_parser = parse_int)]
        modulus: BigInt,
        #[arg(long, value_parser = parse_int, default_value = "0")]
        target: BigInt,
    },
    /// Hensel-lift a simple solution of f(x) ≡ target (mod p) to precision p^k.
    Lift {
        #[command(flatten)]
        common: PolyPrime,
        #[arg(long)]
        precision: u32,
        #[arg(long, value_parser = parse_int)]
        seed: BigInt,
        #[arg(long, value_parser = parse_int, default_value = "0")]
        target: BigInt,
    },
    /// Preimages of target under f modulo p^k reachable by lifting.
    Preimages {
        #[command(flatten)]
        common: PolyPrime,
        #[arg(long)]
        precision: u32,
        #[arg(long, value_parser = parse_int)]
        target: BigInt,
    },
    /// Tree of iterated preimages of the seed modulo p^k.
    Tree {
        #[command(flatten)]
        common: PolyPrime,
        #[arg(long)]
        precision: u32,
        #[arg(long, value_parser = parse_int)]
        seed: BigInt,
        #[arg(long)]
        depth: usize,
        #[arg(long, env = "PADIC_DYN_MAX_NODES", default_value_t = DEFAULT_MAX_NODES)]
        max_nodes: usize,
    },
    /// Forward orbit x, f(x), f(f(x)), ... modulo p^k with cycle detection.
    Orbit {
        #[command(flatten)]
        common: PolyPrime,
        #[arg(long)]
        precision: u32,
        #[arg(long, value_parser = parse_int)]
        seed: BigInt,
        #[arg(long, visible_alias = "depth")]
        steps: usize,
    },
    /// Distance between two equal-length integer sequences.
    Dist {
        /// Comma-separated, e.g. "0,2,0".
        #[arg(long, value_parser = sequence_arg, allow_hyphen_values = true)]
        left: Sequence,
        #[arg(long, value_parser = sequence_arg, allow_hyphen_values = true)]
        right: Sequence,
        #[arg(long, value_enum, default_value_t = Metric::Series)]
        metric: Metric,
        /// Required for the series metric.
        #[arg(long, value_parser = parse_int)]
        prime: Option<BigInt>,
    },
    /// p-adic valuation and absolute value of numerator/denominator.
    Valuation {
        #[arg(long, value_parser = parse_int, allow_hyphen_values = true)]
        numerator: BigInt,
        #[arg(long, value_parser = parse_int, default_value = "1", allow_hyphen_values = true)]
        denominator: BigInt,
        #[arg(long, value_parser = parse_int)]
        prime: BigInt,
    },
    /// Remainder of f mod p on division by x^p - x; same roots, degree < p.
    Reduce {
        #[command(flatten)]
        common: PolyPrime,
    },
    /// Whether monic f divides x^p - x over F_p, i.e. has deg f distinct roots.
    Certify {
        #[command(flatten)]
        common: PolyPrime,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Metric {
    /// Σ |s_i - t_i| / p^i
    Series,
    /// 2^-l, l the first differing index
    FirstDifference,
}

/// A comma-separated integer sequence flag.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Sequence(pub Vec<BigInt>);

fn sequence_arg(text: &str) -> Result<Sequence, String> {
    parse_int_list(text).map(Sequence)
}

fn poly_arg(text: &str) -> Result<IntPoly, String> {
    parse_poly(text).map_err(|e| e.to_string())
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{message}")]
    Domain { kind: &'static str, message: String },
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Domain { .. } => 1,
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            CliError::Usage(_) => "usage",
            CliError::Domain { kind, .. } => kind,
        }
    }

    pub fn to_json(&self) -> String {
        json::to_string(&json::ErrorDoc {
            error: json::ErrorBody {
                kind: self.kind().into(),
                message: self.to_string(),
            },
        })
    }
}

impl From<padic_dyn::Error> for CliError {
    fn from(e: padic_dyn::Error) -> Self {
        use padic_dyn::Error as E;
        let kind = match &e {
            E::NotPrime(_) => "not-prime",
            E::NotARoot { .. } => "not-a-root",
            E::SingularRoot { .. } => "singular-root",
            E::NotAUnit => "not-a-unit",
            E::NotMonic => "not-monic",
            E::DegreeExceedsPrime { .. } => "degree-exceeds-prime",
            E::ModulusAboveBound { .. } | E::ModulusTooSmall(_) => "modulus-out-of-range",
            E::LengthMismatch { .. } => "length-mismatch",
            E::ZeroDenominator => "zero-denominator",
            E::ZeroPrecision => "zero-precision",
            _ => "domain",
        };
        CliError::Domain { kind, message: e.to_string() }
    }
}

fn prime(p: &BigInt) -> Result<Prime, CliError> {
    let n = u64::try_from(p).map_err(|_| CliError::Domain {
        kind: "not-prime",
        message: format!("{p} is not a prime below 2^64"),
    })?;
    Ok(Prime::new(n)?)
}

fn check_modulus(p: Prime, k: u32, max_bits: u64) -> Result<(), CliError> {
    let bits = BigUint::from(p.get()).pow(k).bits();
    if bits > max_bits {
        return Err(CliError::Domain {
            kind: "modulus-too-large",
            message: format!("{p}^{k} has {bits} bits, above the limit of {max_bits} (see --max-modulus-bits)"),
        });
    }
    Ok(())
}

fn rational(r: &BigRational) -> json::Rational {
    json::Rational {
        numerator: dec(r.numer()),
        denominator: dec(r.denom()),
        text: r.to_string(),
    }
}

fn table_rows(out: &mut String, header: &[&str], rows: &[Vec<String>]) {
    let widths: Vec<usize> = (0..header.len())
        .map(|i| rows.iter().map(|r| r[i].len()).chain([header[i].len()]).max().unwrap())
        .collect();
    let line = |out: &mut String, cells: &[String]| {
        let mut s = String::new();
        for (i, c) in cells.iter().enumerate() {
            if i + 1 == cells.len() {
                s.push_str(c);
            } else {
                write!(s, "{c:<w$}  ", w = widths[i]).unwrap();
            }
        }
        out.push_str(s.trim_end());
        out.push('\n');
    };
    line(out, &header.iter().map(|h| h.to_string()).collect::<Vec<_>>());
    for r in rows {
        line(out, r);
    }
}

fn join<T: ToString>(items: impl IntoIterator<Item = T>) -> String {
    items.into_iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", ")
}

/// Runs one parsed invocation and returns what goes to standard output.
pub fn run(cli: &Cli) -> Result<String, CliError> {
    let format = cli.format;
    if format == Format::Dot && !matches!(cli.command, Command::Tree { .. }) {
        return Err(CliError::Usage("--format dot is only available for `tree`".into()));
    }
    let mut out = String::new();
    match &cli.command {
        Command::Roots { common, target } => {
            let p = prime(&common.prime)?;
            let set = roots_mod_p(&common.poly, target, p);
            if format == Format::Json {
                return Ok(json::to_string(&json::RootsDoc {
                    command: "roots",
                    polynomial: coeffs(&common.poly),
                    prime: dec(p),
                    target: dec(target),
                    all_residues: set.all_residues,
                    roots: set.roots.iter().map(Root::from).collect(),
                }));
            }
            writeln!(out, "f(x) = {target} (mod {p}) for f = {}", common.poly).unwrap();
            if set.all_residues {
                out.push_str("f - target vanishes identically mod p: every residue is a root\n");
            }
            let rows: Vec<Vec<String>> = set
                .roots
                .iter()
                .map(|r| {
                    vec![
                        r.residue.to_string(),
                        r.derivative_residue.to_string(),
                        if r.singular { "singular" } else { "nonsingular" }.into(),
                    ]
                })
                .collect();
            table_rows(&mut out, &["residue", "f'(a) mod p", "class"], &rows);
        }
        Command::Oracle { poly, modulus, target } => {
            let m = u64::try_from(modulus).map_err(|_| CliError::Domain {
                kind: "modulus-out-of-range",
                message: format!("modulus {modulus} is out of range"),
            })?;
            let sols = solve_congruence_bruteforce(poly, target, m)?;
            if format == Format::Json {
                return Ok(json::to_string(&json::OracleDoc {
                    command: "oracle",
                    polynomial: coeffs(poly),
                    modulus: dec(m),
                    target: dec(target),
                    solutions: sols.iter().map(dec).collect(),
                }));
            }
            writeln!(out, "{poly} = {target} (mod {m}): {} solution(s)", sols.len()).unwrap();
            writeln!(out, "{{{}}}", join(&sols)).unwrap();
        }
        Command::Lift { common, precision, seed, target } => {
            let p = prime(&common.prime)?;
            check_modulus(p, *precision, cli.max_modulus_bits)?;
            let lifted = lift_preimage(&common.poly, target, seed, *precision, p)?;
            let padic = lifted.to_padic();
            if format == Format::Json {
                return Ok(json::to_string(&json::LiftDoc {
                    command: "lift",
                    polynomial: coeffs(&common.poly),
                    prime: dec(p),
                    precision: *precision,
                    seed: dec(seed),
                    target: dec(target),
                    ladder: lifted.ladder().iter().map(dec).collect(),
                    root: dec(lifted.root()),
                    digits: padic.digits().iter().map(dec).collect(),
                }));
            }
            writeln!(out, "lifting {seed} for {} = {target} over Z/{p}^{precision}", common.poly).unwrap();
            let rows: Vec<Vec<String>> = lifted
                .ladder()
                .iter()
                .enumerate()
                .map(|(j, a)| vec![(j + 1).to_string(), format!("{p}^{}", j + 1), a.to_string()])
                .collect();
            table_rows(&mut out, &["level", "modulus", "root"], &rows);
            writeln!(out, "digits (a_0 first): {}", join(padic.digits())).unwrap();
        }
        Command::Preimages { common, precision, target } => {
            let p = prime(&common.prime)?;
            check_modulus(p, *precision, cli.max_modulus_bits)?;
            let pre = preimages(&common.poly, target, p, *precision)?;
            if format == Format::Json {
                return Ok(json::to_string(&json::PreimagesDoc {
                    command: "preimages",
                    polynomial: coeffs(&common.poly),
                    prime: dec(p),
                    precision: *precision,
                    target: dec(target),
                    lifted: pre.lifted.iter().map(dec).collect(),
                    singular: pre.singular.iter().map(Root::from).collect(),
                }));
            }
            writeln!(out, "preimages of {target} under {} over Z/{p}^{precision}", common.poly).unwrap();
            writeln!(out, "lifted:   {{{}}}", join(&pre.lifted)).unwrap();
            writeln!(out, "singular: {{{}}} (mod {p}, not lifted)", join(pre.singular.iter().map(|r| r.residue))).unwrap();
        }
        Command::Tree { common, precision, seed, depth, max_nodes } => {
            let p = prime(&common.prime)?;
            check_modulus(p, *precision, cli.max_modulus_bits)?;
            let tree = backward_tree(&common.poly, seed, p, *precision, *depth, *max_nodes)?;
            if !tree.is_complete() {
                return Err(CliError::Domain {
                    kind: "budget-exhausted",
                    message: format!(
                        "node budget of {max_nodes} exhausted after {} nodes; raise --max-nodes or PADIC_DYN_MAX_NODES",
                        tree.nodes().len()
                    ),
                });
            }
            match format {
                Format::Json => return Ok(json::to_string(&json::TreeDoc::from(&tree))),
                Format::Dot => return Ok(tree_to_dot(&tree)),
                Format::Table => {}
            }
            writeln!(
                out,
                "backward tree of {} over Z/{p}^{precision}, seed {}, depth {depth}: {} nodes",
                common.poly,
                tree.seed(),
                tree.nodes().len()
            )
            .unwrap();
            write_subtree(&mut out, &tree, 0);
        }
        Command::Orbit { common, precision, seed, steps } => {
            let p = prime(&common.prime)?;
            check_modulus(p, *precision, cli.max_modulus_bits)?;
            let orbit = forward_orbit(&common.poly, seed, p, *precision, *steps)?;
            if format == Format::Json {
                return Ok(json::to_string(&json::OrbitDoc {
                    command: "orbit",
                    polynomial: coeffs(&common.poly),
                    prime: dec(p),
                    precision: *precision,
                    terms: orbit.terms.iter().map(dec).collect(),
                    cycle: orbit.cycle.map(Into::into),
                }));
            }
            writeln!(out, "orbit of {seed} under {} over Z/{p}^{precision}", common.poly).unwrap();
            writeln!(out, "{}", join(&orbit.terms)).unwrap();
            match orbit.cycle {
                Some(c) if c.tail > 0 => {
                    writeln!(out, "pre-periodic: tail {}, cycle length {}", c.tail, c.length).unwrap()
                }
                Some(c) => writeln!(out, "periodic: cycle length {}", c.length).unwrap(),
                None => out.push_str("no repetition within the computed terms\n"),
            }
        }
        Command::Dist { left, right, metric, prime: p } => {
            let (d, name, p) = match metric {
                Metric::Series => {
                    let p = p.as_ref().ok_or_else(|| {
                        CliError::Usage("the series metric needs --prime".into())
                    })?;
                    let p = prime(p)?;
                    (distance_series(&left.0, &right.0, p)?, "series", Some(p))
                }
                Metric::FirstDifference => {
                    (distance_first_difference(&left.0, &right.0)?, "first-difference", None)
                }
            };
            if format == Format::Json {
                return Ok(json::to_string(&json::DistDoc {
                    command: "dist",
                    metric: name,
                    prime: p.map(dec),
                    distance: rational(&d),
                }));
            }
            writeln!(out, "{d}").unwrap();
        }
        Command::Valuation { numerator, denominator, prime: p } => {
            let p = prime(p)?;
            let v = vp_rat(numerator, denominator, p)?;
            let norm = abs_p(numerator, denominator, p)?.to_rational();
            let v = match v {
                RatValuation::Finite(e) => Some(e),
                RatValuation::Infinite => None,
            };
            if format == Format::Json {
                return Ok(json::to_string(&json::ValuationDoc {
                    command: "valuation",
                    prime: dec(p),
                    numerator: dec(numerator),
                    denominator: dec(denominator),
                    valuation: v,
                    norm: rational(&norm),
                }));
            }
            let shown = if denominator.is_one() {
                numerator.to_string()
            } else {
                format!("{numerator}/{denominator}")
            };
            match v {
                Some(e) => writeln!(out, "v_{p}({shown}) = {e}").unwrap(),
                None => writeln!(out, "v_{p}({shown}) = infinity").unwrap(),
            }
            writeln!(out, "|{shown}|_{p} = {norm}").unwrap();
        }
        Command::Reduce { common } => {
            let p = prime(&common.prime)?;
            let g = common.poly.fermat_reduce(p);
            if format == Format::Json {
                return Ok(json::to_string(&json::ReduceDoc {
                    command: "reduce",
                    polynomial: coeffs(&common.poly),
                    prime: dec(p),
                    reduced: fp_coeffs(&g),
                    all_residues_are_roots: g.is_zero(),
                }));
            }
            writeln!(out, "{} mod (x^{p} - x, {p}) = {g}", common.poly).unwrap();
            if g.is_zero() {
                out.push_str("every residue is a root\n");
            }
        }
        Command::Certify { common } => {
            let p = prime(&common.prime)?;
            let cert = common.poly.divides_xp_minus_x(p)?;
            if format == Format::Json {
                return Ok(json::to_string(&json::CertifyDoc {
                    command: "certify",
                    polynomial: coeffs(&common.poly),
                    prime: dec(p),
                    divides: cert.divides,
                    quotient: fp_coeffs(&cert.quotient),
                    remainder: fp_coeffs(&cert.remainder),
                }));
            }
            let n = common.poly.reduce_mod_p(p).degree().unwrap_or(0);
            if cert.divides {
                writeln!(out, "x^{p} - x = ({}) * ({}) over F_{p}", common.poly.reduce_mod_p(p), cert.quotient).unwrap();
                writeln!(out, "exactly {n} roots mod {p}").unwrap();
            } else {
                writeln!(out, "does not divide x^{p} - x: remainder {}", cert.remainder).unwrap();
                writeln!(out, "fewer than {n} roots mod {p}").unwrap();
            }
        }
    }
    Ok(out)
}

fn write_subtree(out: &mut String, tree: &padic_dyn::backward::BackwardTree, id: usize) {
    let n = tree.node(id);
    let indent = "  ".repeat(n.depth);
    let modulus = if n.precision == tree.precision() {
        String::new()
    } else {
        format!(" (mod {}^{})", tree.prime(), n.precision)
    };
    writeln!(out, "{indent}{}{modulus} [{}]", n.value, n.status.as_str()).unwrap();
    for &c in &n.children {
        write_subtree(out, tree, c);
    }
}
