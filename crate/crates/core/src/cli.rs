//! Command-line front end. `run` parses arguments and renders one request;
//! `main.rs` only prints the result and sets the exit code.

#![allow(clippy::clone_on_copy)]

use std::fmt::Write as _;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::abelian::AbelianGroup;
use crate::cyclotomic::{cyclotomic_poly, rational_basis_cyclic, CyclotomicField};
use crate::error::{AlgebraError, Result};
use crate::factorize::{
    det_over_fq, det_over_q, det_split_field, factor_xn1_fq, format_factor_product, vandermonde_det,
    vandermonde_direct, vandermonde_product, verify_group_determinant, FactoredDeterminant,
};
use crate::frobenius::{
    abelian_representations, block_diagonalize, frobenius_factorization, s3_with_representations, FiniteGroup,
    Representation,
};
use crate::multipoly::{symbolic_det, MultiPoly, DET_CAP};
use crate::rings::{galois_field, is_prime, prime_factors, Field, Matrix, PrimeField, Rationals, UniPoly};
use crate::transform::{
    blahut_weight, convolve, fft, group_idempotents, inverse_fft, verify_group_idempotents, GroupVector, Side,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_PARSE: i32 = 1;
pub const EXIT_PRECONDITION: i32 = 2;

#[derive(Parser, Debug)]
#[command(
    name = "groupfft",
    version,
    about = "Group matrices, finite Fourier transforms over abelian groups and group determinants",
    after_help = "Vectors are comma-separated values in canonical element order: tuples (a_1,...,a_k) \
                  in lexicographic order, last component fastest.\n\
                  Fields: Q, Qzeta, Qzeta:<d>, F<p>, Fp:<p>, F<q>, Fq:<p>^<r>.\n\
                  Exit codes: 0 success, 1 parse error, 2 precondition violation."
)]
pub struct Cli {
    /// Machine-readable JSON output.
    #[arg(long, global = true)]
    pub json: bool,
    /// Seed for sampled self-tests.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Run redundant cross-checks.
    #[arg(long, global = true)]
    pub verify: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Cyclotomic polynomials and the rational idempotent basis of Q[X]/(X^n - 1).
    Cyclo {
        #[command(subcommand)]
        what: CycloCommand,
    },
    /// Forward transform B_chi = sum_sigma chi(sigma) b_sigma.
    Fft(VectorArgs),
    /// Inverse transform b_sigma = (1/n) sum_chi chi(sigma^-1) B_chi.
    Ifft(VectorArgs),
    /// Rank of the dual matrix of the transform (equals the Hamming weight).
    Weight(VectorArgs),
    /// Idempotents e_chi of the group ring, one per character.
    Idempotents(GroupFieldArgs),
    /// Factor X^n - 1 over F_q by cyclotomic cosets.
    #[command(name = "factor-xn1")]
    FactorXn1 {
        #[arg(long)]
        n: u64,
        /// Prime power q.
        #[arg(long)]
        q: u64,
    },
    /// Factor the group determinant.
    Groupdet {
        #[arg(long)]
        group: String,
        #[arg(long, value_enum)]
        over: Over,
        /// Prime power for `--over Fq`.
        #[arg(long)]
        q: Option<u64>,
        /// Field for `--over split`; defaults to Qzeta:<exponent>.
        #[arg(long)]
        field: Option<String>,
    },
    /// The Vandermonde determinant of the n-th roots of unity.
    Vandermonde {
        #[arg(long)]
        n: u64,
        /// Defaults to Qzeta:<n>.
        #[arg(long)]
        field: Option<String>,
    },
    /// Frobenius factorization of det A_G for S3, an abelian group or a JSON Cayley table.
    Frobenius {
        /// `S3` or an abelian descriptor such as `C2xC2`.
        #[arg(long, conflicts_with = "table")]
        group: Option<String>,
        /// JSON file with `labels`, `table` and optionally `conductor` and `representations`.
        #[arg(long)]
        table: Option<String>,
    },
}

#[derive(Subcommand, Debug)]
pub enum CycloCommand {
    /// Print Phi_d.
    Phi { d: u64 },
    /// Print E_{d,j} for every d | n.
    Basis { n: u64 },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Over {
    #[value(name = "Q")]
    Q,
    #[value(name = "Fq")]
    Fq,
    #[value(name = "split")]
    Split,
}

#[derive(Args, Debug)]
pub struct GroupFieldArgs {
    /// Group descriptor such as `C4` or `C2xC3`.
    #[arg(long)]
    pub group: String,
    /// Field descriptor.
    #[arg(long)]
    pub field: String,
}

#[derive(Args, Debug)]
pub struct VectorArgs {
    #[command(flatten)]
    pub gf: GroupFieldArgs,
    /// Comma-separated values in canonical element order.
    #[arg(long, allow_hyphen_values = true)]
    pub vector: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FieldDescriptor {
    Q,
    /// `None` picks the group exponent.
    Qzeta(Option<u64>),
    Fp(u64),
    Fq(u64, usize),
}

impl FieldDescriptor {
    pub fn parse(s: &str) -> Result<Self> {
        let bad = || AlgebraError::parse(format!("unknown field descriptor `{s}`"));
        let num = |t: &str| t.trim().parse::<u64>().map_err(|_| bad());
        if s == "Q" {
            return Ok(FieldDescriptor::Q);
        }
        if let Some(rest) = s.strip_prefix("Qzeta") {
            return match rest.strip_prefix(':').or_else(|| rest.strip_prefix('_')) {
                _ if rest.is_empty() => Ok(FieldDescriptor::Qzeta(None)),
                Some(d) if num(d)? > 0 => Ok(FieldDescriptor::Qzeta(Some(num(d)?))),
                _ => Err(bad()),
            };
        }
        if let Some(p) = s.strip_prefix("Fp:") {
            let p = num(p)?;
            return if is_prime(p) { Ok(FieldDescriptor::Fp(p)) } else { Err(bad()) };
        }
        if let Some(rest) = s.strip_prefix("Fq:") {
            let (p, r) = rest.split_once('^').ok_or_else(bad)?;
            return Self::prime_power(num(p)?, num(r)? as usize).ok_or_else(bad);
        }
        if let Some(q) = s.strip_prefix('F') {
            return Self::from_order(num(q)?).ok_or_else(bad);
        }
        Err(bad())
    }

    fn prime_power(p: u64, r: usize) -> Option<Self> {
        match r {
            _ if !is_prime(p) || r == 0 => None,
            1 => Some(FieldDescriptor::Fp(p)),
            _ => Some(FieldDescriptor::Fq(p, r)),
        }
    }

    /// `F_q` from its order.
    pub fn from_order(q: u64) -> Option<Self> {
        let ps = prime_factors(q);
        if ps.len() != 1 {
            return None;
        }
        let p = ps[0];
        let (mut r, mut m) = (0, q);
        while m % p == 0 {
            m /= p;
            r += 1;
        }
        Self::prime_power(p, r)
    }
}

enum AnyField {
    Q(Rationals),
    Cyc(CyclotomicField),
    P(PrimeField),
    G(crate::rings::GaloisField),
}

fn resolve(desc: &FieldDescriptor, default_conductor: u64) -> Result<AnyField> {
    Ok(match *desc {
        FieldDescriptor::Q => AnyField::Q(Rationals),
        FieldDescriptor::Qzeta(d) => AnyField::Cyc(CyclotomicField::new(d.unwrap_or(default_conductor))?),
        FieldDescriptor::Fp(p) => AnyField::P(PrimeField::new(p)?),
        FieldDescriptor::Fq(p, r) => AnyField::G(galois_field(p, r)?),
    })
}

macro_rules! with_field {
    ($any:expr, |$f:ident| $body:expr) => {
        match $any {
            AnyField::Q($f) => $body,
            AnyField::Cyc($f) => $body,
            AnyField::P($f) => $body,
            AnyField::G($f) => $body,
        }
    };
}

macro_rules! with_finite_field {
    ($q:expr, |$f:ident| $body:expr) => {
        match FieldDescriptor::from_order($q).ok_or_else(|| AlgebraError::parse(format!("q = {} is not a prime power", $q)))? {
            FieldDescriptor::Fp(p) => {
                let $f = PrimeField::new(p)?;
                $body
            }
            FieldDescriptor::Fq(p, r) => {
                let $f = galois_field(p, r)?;
                $body
            }
            _ => unreachable!("from_order yields finite fields"),
        }
    };
}

/// Rendered result of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

pub fn exit_code(e: &AlgebraError) -> i32 {
    if e.is_parse_error() || matches!(e, AlgebraError::DimensionMismatch { .. }) {
        EXIT_PARSE
    } else {
        EXIT_PRECONDITION
    }
}

/// Parses `args` (program name first) and dispatches.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => match dispatch(&cli) {
            Ok(stdout) => Outcome { code: EXIT_OK, stdout, stderr: String::new() },
            Err(e) => Outcome { code: exit_code(&e), stdout: String::new(), stderr: format!("error: {e}\n") },
        },
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    Outcome { code: EXIT_OK, stdout: text, stderr: String::new() }
                }
                _ => Outcome { code: EXIT_PARSE, stdout: String::new(), stderr: text },
            }
        }
    }
}

pub fn dispatch(cli: &Cli) -> Result<String> {
    let mut out = match &cli.command {
        Command::Cyclo { what } => cyclo(cli, what),
        Command::Fft(a) => transform_cmd(cli, a, Side::Group),
        Command::Ifft(a) => transform_cmd(cli, a, Side::Dual),
        Command::Weight(a) => weight(cli, a),
        Command::Idempotents(a) => idempotents(cli, a),
        Command::FactorXn1 { n, q } => factor_xn1(cli, *n, *q),
        Command::Groupdet { group, over, q, field } => groupdet(cli, group, *over, *q, field.as_deref()),
        Command::Vandermonde { n, field } => vandermonde(cli, *n, field.as_deref()),
        Command::Frobenius { group, table } => frobenius(cli, group.as_deref(), table.as_deref()),
    }?;
    if !out.ends_with('\n') {
        out.push('\n');
    }
    Ok(out)
}

fn json_string(v: Value) -> String {
    serde_json::to_string_pretty(&v).expect("JSON values serialize")
}

fn elems_json<F: Field>(field: &F, xs: &[F::Elem]) -> Value {
    Value::Array(xs.iter().map(|x| Value::String(field.format_elem(x))).collect())
}

fn poly_json<F: Field>(p: &UniPoly<F>) -> Value {
    json!({ "text": p.to_string(), "coeffs": elems_json(p.field(), p.coeffs()) })
}

fn multipoly_json<F: Field>(p: &MultiPoly<F>) -> Value {
    json!({ "vars": p.vars(), "text": p.to_string(), "terms": p.json_terms() })
}

fn cyclo(cli: &Cli, what: &CycloCommand) -> Result<String> {
    match *what {
        CycloCommand::Phi { d } => {
            if d == 0 {
                return Err(AlgebraError::parse("d must be positive"));
            }
            let p = cyclotomic_poly(d);
            Ok(if cli.json { json_string(json!({ "d": d, "phi": poly_json(&p) })) } else { p.to_string() })
        }
        CycloCommand::Basis { n } => {
            if n == 0 {
                return Err(AlgebraError::parse("n must be positive"));
            }
            let basis = rational_basis_cyclic(n)?;
            if cli.json {
                let items: Vec<Value> =
                    basis.iter().map(|e| json!({ "d": e.d, "j": e.j, "poly": poly_json(&e.poly) })).collect();
                return Ok(json_string(json!({ "n": n, "basis": items })));
            }
            let mut s = String::new();
            for e in &basis {
                writeln!(s, "E[{},{}] = {}", e.d, e.j, e.poly).expect("write to String");
            }
            Ok(s)
        }
    }
}

fn group_and_field(a: &GroupFieldArgs) -> Result<(AbelianGroup, AnyField)> {
    let group = AbelianGroup::parse(&a.group)?;
    let field = resolve(&FieldDescriptor::parse(&a.field)?, group.exponent())?;
    Ok((group, field))
}

fn vector_json<F: Field>(v: &GroupVector<F>) -> Value {
    json!({
        "group": v.group().name(),
        "field": v.field().name(),
        "side": if v.side() == Side::Group { "group" } else { "dual" },
        "values": elems_json(v.field(), v.values()),
    })
}

fn transform_cmd(cli: &Cli, a: &VectorArgs, side: Side) -> Result<String> {
    let (group, any) = group_and_field(&a.gf)?;
    with_field!(any, |field| {
        let v = GroupVector::parse(group.clone(), field.clone(), side, &a.vector)?;
        let (forward, backward): (fn(&_) -> _, fn(&_) -> _) =
            if side == Side::Group { (fft, inverse_fft) } else { (inverse_fft, fft) };
        let w = forward(&v)?;
        if cli.verify {
            if backward(&w)? != v {
                return Err(AlgebraError::VerificationFailed("round trip failed".into()));
            }
            // convolution theorem against a seeded partner vector
            if side == Side::Group {
                let mut rng = ChaCha8Rng::seed_from_u64(cli.seed);
                let u = GroupVector::random(group, field.clone(), Side::Group, &mut rng);
                let lhs = fft(&convolve(&v, &u)?)?;
                let fu = fft(&u)?;
                let rhs: Vec<_> = w.values().iter().zip(fu.values()).map(|(x, y)| field.mul(x, y)).collect();
                if lhs.values() != rhs.as_slice() {
                    return Err(AlgebraError::VerificationFailed("convolution theorem failed".into()));
                }
            }
        }
        Ok(if cli.json { json_string(vector_json(&w)) } else { w.format() })
    })
}

fn weight(cli: &Cli, a: &VectorArgs) -> Result<String> {
    let (group, any) = group_and_field(&a.gf)?;
    with_field!(any, |field| {
        let v = GroupVector::parse(group, field, Side::Group, &a.vector)?;
        let rank = blahut_weight(&v)?;
        let hw = v.hamming_weight();
        if cli.verify && rank != hw {
            return Err(AlgebraError::VerificationFailed(format!("rank {rank} differs from weight {hw}")));
        }
        Ok(if cli.json { json_string(json!({ "rank": rank, "hamming_weight": hw })) } else { rank.to_string() })
    })
}

fn idempotents(cli: &Cli, a: &GroupFieldArgs) -> Result<String> {
    let (group, any) = group_and_field(a)?;
    with_field!(any, |field| {
        let idems = group_idempotents(&group, &field)?;
        if cli.verify {
            verify_group_idempotents(&idems)?;
        }
        let chars = group.characters();
        if cli.json {
            let items: Vec<Value> = chars
                .iter()
                .zip(&idems)
                .map(|(c, e)| json!({ "character": c.to_string(), "values": elems_json(&field, e.values()) }))
                .collect();
            return Ok(json_string(json!({ "group": group.name(), "field": field.name(), "idempotents": items })));
        }
        let mut s = String::new();
        for (c, e) in chars.iter().zip(&idems) {
            writeln!(s, "e{c} = {}", e.format()).expect("write to String");
        }
        Ok(s)
    })
}

fn factor_xn1(cli: &Cli, n: u64, q: u64) -> Result<String> {
    if n == 0 {
        return Err(AlgebraError::parse("n must be positive"));
    }
    with_finite_field!(q, |field| {
        let factors = factor_xn1_fq(n, &field)?;
        if cli.verify {
            let mut prod = UniPoly::one(field.clone());
            for f in &factors {
                prod = prod.try_mul(&f.poly)?;
            }
            if prod != UniPoly::x_pow_minus_one(field.clone(), n as usize) {
                return Err(AlgebraError::VerificationFailed("factors do not multiply to X^n - 1".into()));
            }
        }
        if cli.json {
            let items: Vec<Value> = factors
                .iter()
                .map(|f| json!({ "coset": f.labels, "label": f.label(), "poly": poly_json(&f.poly) }))
                .collect();
            return Ok(json_string(json!({ "n": n, "q": q, "field": field.name(), "factors": items })));
        }
        let polys: Vec<_> = factors.iter().map(|f| f.poly.clone()).collect();
        Ok(format_factor_product(&polys))
    })
}

fn factored_json<F: Field>(fd: &FactoredDeterminant<F>) -> Value {
    let items: Vec<Value> = fd
        .factors
        .iter()
        .map(|f| {
            json!({
                "label": f.label,
                "multiplicity": f.multiplicity,
                "irreducible": f.irreducible.as_str(),
                "poly": multipoly_json(&f.poly),
            })
        })
        .collect();
    json!({ "field": fd.field.name(), "vars": fd.vars, "text": fd.format(), "factors": items })
}

fn render_factored<F: Field>(cli: &Cli, group: &AbelianGroup, fd: &FactoredDeterminant<F>) -> Result<String> {
    if cli.verify {
        verify_group_determinant(group, fd)?;
    }
    if cli.json {
        let mut v = factored_json(fd);
        v["group"] = Value::String(group.name());
        return Ok(json_string(v));
    }
    Ok(fd.format())
}

fn groupdet(cli: &Cli, group: &str, over: Over, q: Option<u64>, field: Option<&str>) -> Result<String> {
    let g = AbelianGroup::parse(group)?;
    let cyclic_n = || {
        if g.is_cyclic() {
            Ok(g.order())
        } else {
            Err(AlgebraError::Unsupported(format!("--over Q and --over Fq need a cyclic group, got {}", g.name())))
        }
    };
    match over {
        Over::Q => render_factored(cli, &g, &det_over_q(cyclic_n()?)?),
        Over::Fq => {
            let q = q.ok_or_else(|| AlgebraError::parse("--over Fq needs --q"))?;
            let n = cyclic_n()?;
            with_finite_field!(q, |f| render_factored(cli, &g, &det_over_fq(n, &f)?))
        }
        Over::Split => {
            let desc = FieldDescriptor::parse(field.unwrap_or("Qzeta"))?;
            with_field!(resolve(&desc, g.exponent())?, |f| render_factored(cli, &g, &det_split_field(&g, &f)?))
        }
    }
}

fn vandermonde(cli: &Cli, n: u64, field: Option<&str>) -> Result<String> {
    if n == 0 {
        return Err(AlgebraError::parse("n must be positive"));
    }
    let desc = FieldDescriptor::parse(field.unwrap_or("Qzeta"))?;
    with_field!(resolve(&desc, n)?, |f| {
        let value = vandermonde_det(n, &f)?;
        if cli.verify && vandermonde_product(n, &f)? != vandermonde_direct(n, &f)? {
            return Err(AlgebraError::VerificationFailed("product and determinant disagree".into()));
        }
        let text = f.format_elem(&value);
        Ok(if cli.json { json_string(json!({ "n": n, "field": f.name(), "value": text })) } else { text })
    })
}

fn frobenius(cli: &Cli, group: Option<&str>, table: Option<&str>) -> Result<String> {
    match (group, table) {
        (Some("S3"), _) => frobenius_s3(cli),
        (Some(desc), _) => {
            let g = AbelianGroup::parse(desc)?;
            let field = CyclotomicField::new(g.exponent())?;
            let (fg, reps) = abelian_representations(&g, &field)?;
            render_frobenius(cli, &fg, &reps)
        }
        (None, Some(path)) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| AlgebraError::parse(format!("cannot read {path}: {e}")))?;
            let value: Value =
                serde_json::from_str(&text).map_err(|e| AlgebraError::parse(format!("{path}: {e}")))?;
            frobenius_table(cli, &value)
        }
        (None, None) => Err(AlgebraError::parse("frobenius needs --group or --table")),
    }
}

fn frobenius_s3(cli: &Cli) -> Result<String> {
    let (g, reps) = s3_with_representations();
    let bd = block_diagonalize(&g, &reps)?;
    let l0 = bd.blocks[0][0][0].clone();
    let l1 = bd.blocks[1][0][0].clone();
    let det_m = symbolic_det(&bd.blocks[2])?;
    let fd = frobenius_factorization(&g, &reps)?;
    if cli.verify {
        let full = symbolic_det(&g.symbolic_group_matrix(reps[0].field()))?;
        if full != l0.try_mul(&l1)?.try_mul(&det_m.pow(2))? {
            return Err(AlgebraError::VerificationFailed("det A_G differs from L0 L1 (det M)^2".into()));
        }
    }
    let identity = "det A_G = L0 * L1 * (det M)^2 (verified)";
    if cli.json {
        let m: Vec<Vec<String>> = bd.blocks[2].iter().map(|r| r.iter().map(|p| p.to_string()).collect()).collect();
        let mut v = factored_json(&fd);
        v["group"] = json!("S3");
        v["L0"] = multipoly_json(&l0);
        v["L1"] = multipoly_json(&l1);
        v["M"] = json!(m);
        v["det_M"] = multipoly_json(&det_m);
        v["identity"] = json!(identity);
        return Ok(json_string(v));
    }
    Ok(format!("L0 = {l0}\nL1 = {l1}\ndet M = {det_m}\n{identity}"))
}

fn render_frobenius<F: Field>(cli: &Cli, g: &FiniteGroup, reps: &[Representation<F>]) -> Result<String> {
    let fd = frobenius_factorization(g, reps)?;
    if cli.json {
        let mut v = factored_json(&fd);
        v["order"] = json!(g.order());
        return Ok(json_string(v));
    }
    let mut s = String::new();
    for f in &fd.factors {
        writeln!(s, "Psi[{}] = {}  (degree {})", f.label, f.poly, f.multiplicity).expect("write to String");
    }
    write!(s, "det A_G = {} (verified)", fd.format()).expect("write to String");
    Ok(s)
}

/// A user table, optionally with representations over `Q(zeta_conductor)`
/// given as one matrix of element strings per group element.
fn frobenius_table(cli: &Cli, value: &Value) -> Result<String> {
    let g = FiniteGroup::from_json(value)?;
    let Some(reps_json) = value.get("representations") else {
        if g.order() > DET_CAP {
            return Err(AlgebraError::CapExceeded { size: g.order(), cap: DET_CAP });
        }
        let det = symbolic_det(&g.symbolic_group_matrix(&Rationals))?;
        return Ok(if cli.json {
            json_string(json!({ "order": g.order(), "det": multipoly_json(&det) }))
        } else {
            format!("det A_G = {det}")
        });
    };
    let conductor = value.get("conductor").map_or(Some(1), Value::as_u64).filter(|&d| d > 0);
    let conductor = conductor.ok_or_else(|| AlgebraError::parse("`conductor` must be a positive integer"))?;
    let field = CyclotomicField::new(conductor)?;
    let bad = |m: &str| AlgebraError::parse(format!("representation JSON: {m}"));
    let reps = reps_json
        .as_array()
        .ok_or_else(|| bad("`representations` must be an array"))?
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let name = r.get("name").and_then(Value::as_str).map_or_else(|| format!("rho{i}"), String::from);
            let images = r
                .get("images")
                .and_then(Value::as_array)
                .ok_or_else(|| bad("missing `images`"))?
                .iter()
                .map(|m| {
                    let rows = m
                        .as_array()
                        .ok_or_else(|| bad("images must be matrices"))?
                        .iter()
                        .map(|row| {
                            row.as_array()
                                .ok_or_else(|| bad("matrix rows must be arrays"))?
                                .iter()
                                .map(|x| match x {
                                    Value::String(s) => field.parse_elem(s),
                                    Value::Number(n) => field.parse_elem(&n.to_string()),
                                    _ => Err(bad("entries must be strings or numbers")),
                                })
                                .collect::<Result<Vec<_>>>()
                        })
                        .collect::<Result<Vec<_>>>()?;
                    Matrix::from_rows(field.clone(), rows)
                })
                .collect::<Result<Vec<_>>>()?;
            Representation::new(&g, name, field.clone(), images)
        })
        .collect::<Result<Vec<_>>>()?;
    if reps.is_empty() {
        return Err(bad("no representations given"));
    }
    render_frobenius(cli, &g, &reps)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &str) -> Outcome {
        run(std::iter::once("groupfft").chain(args.split_whitespace()))
    }

    #[test]
    fn field_descriptors() {
        assert_eq!(FieldDescriptor::parse("Q").unwrap(), FieldDescriptor::Q);
        assert_eq!(FieldDescriptor::parse("Qzeta").unwrap(), FieldDescriptor::Qzeta(None));
        assert_eq!(FieldDescriptor::parse("Qzeta:6").unwrap(), FieldDescriptor::Qzeta(Some(6)));
        assert_eq!(FieldDescriptor::parse("F7").unwrap(), FieldDescriptor::Fp(7));
        assert_eq!(FieldDescriptor::parse("Fp:13").unwrap(), FieldDescriptor::Fp(13));
        assert_eq!(FieldDescriptor::parse("F4").unwrap(), FieldDescriptor::Fq(2, 2));
        assert_eq!(FieldDescriptor::parse("Fq:5^2").unwrap(), FieldDescriptor::Fq(5, 2));
        for bad in ["R", "F6", "Fp:8", "Fq:4^2", "Qzeta:0", "Qzeta:x", "F"] {
            assert!(FieldDescriptor::parse(bad).unwrap_err().is_parse_error(), "{bad}");
        }
    }

    #[test]
    fn documented_examples() {
        let o = run_args("factor-xn1 --n 3 --q 2");
        assert_eq!((o.code, o.stdout.as_str()), (0, "(X + 1)(X^2 + X + 1)\n"));
        let o = run_args("weight --group C2 --field Q --vector 1,0");
        assert_eq!((o.code, o.stdout.as_str()), (0, "1\n"));
        let o = run_args("fft --group C2 --field Q --vector 1,1");
        assert_eq!((o.code, o.stdout.as_str()), (0, "2,0\n"));
    }

    #[test]
    fn exit_codes() {
        assert_eq!(run_args("bogus").code, EXIT_PARSE);
        assert_eq!(run_args("fft --group C2 --field Q --vector 1,2,3").code, EXIT_PARSE);
        assert_eq!(run_args("fft --group C2x --field Q --vector 1,2").code, EXIT_PARSE);
        assert_eq!(run_args("fft --group C3 --field F3 --vector 1,2,0").code, EXIT_PRECONDITION);
        assert_eq!(run_args("fft --group C3 --field Q --vector 1,2,0").code, EXIT_PRECONDITION);
        assert_eq!(run_args("factor-xn1 --n 4 --q 2").code, EXIT_PRECONDITION);
        assert_eq!(run_args("factor-xn1 --n 4 --q 6").code, EXIT_PARSE);
        assert_eq!(run_args("--help").code, EXIT_OK);
    }
}
