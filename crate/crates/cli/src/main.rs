//! `nafloat`: recoding, encoding, decoding and comparison tables for NAF
//! tapered floating point.
//!
//! Data goes to stdout (or `--out`). Usage errors exit with 2; domain
//! errors exit with 1 after printing `error: <code>: <message>` to stderr.

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use naf_core::comparator::{
    merit, pbom_sweep, SystemKind, SystemModel, MERIT_CSV_HEADER, PBOM_CSV_HEADER,
};
use naf_core::naf::{chain_trace, recode_chain, recode_oracle};
use naf_core::points::{classify, find_points, point_signature};
use naf_core::realcodec::{
    comparison_key, decode_real, encode_real, enumerate_real, parse_real, round_real,
};
use naf_core::trit::{pack_binary, parse_trits, unpack_binary};
use naf_core::{encode_entity, DecodedEntity, Dyadic, Error, Result, TritField};
use num_bigint::BigInt;

#[derive(Parser)]
#[command(
    name = "nafloat",
    version,
    about = "Nonadjacent-form tapered floating point"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Canonical nonadjacent form of an integer, or of a signed-digit field
    /// through the carry chain.
    Recode(RecodeArgs),
    /// Encode a value into an N-trit field.
    Encode(EncodeArgs),
    /// Decode a trit field, or an IEEE/Posit code.
    Decode(DecodeArgs),
    /// Show everything known about a field.
    Inspect(InspectArgs),
    /// Every pure-real value at width N, in value order, as CSV.
    Enumerate(EnumerateArgs),
    /// Precision by order of magnitude, as CSV.
    Pbom(PbomArgs),
    /// Factors of merit, as CSV.
    Merit(MeritArgs),
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct Source {
    /// Decimal integer.
    #[arg(long, allow_hyphen_values = true)]
    int: Option<String>,
    /// Trit string, MSB first, `T` for -1.
    #[arg(long)]
    field: Option<String>,
}

#[derive(Args)]
struct RecodeArgs {
    #[command(flatten)]
    source: Source,
    /// With --field, also print the assistant and j values.
    #[arg(long)]
    trace: bool,
}

#[derive(Copy, Clone, ValueEnum)]
enum Infinity {
    Pos,
    Neg,
    Complex,
}

#[derive(Args)]
struct EncodeArgs {
    #[arg(long = "N")]
    n: usize,
    /// Real value: decimal, `a/b` with b a power of two, or `m*2^e`.
    #[arg(long, allow_hyphen_values = true, conflicts_with_all = ["int", "inf"])]
    value: Option<String>,
    /// Imaginary part; makes the value complex.
    #[arg(long, allow_hyphen_values = true, requires = "value")]
    im: Option<String>,
    #[arg(long, allow_hyphen_values = true, conflicts_with = "inf")]
    int: Option<String>,
    #[arg(long, value_enum)]
    inf: Option<Infinity>,
    /// Round to the nearest representable value first.
    #[arg(long, requires = "value")]
    round: bool,
    /// Pure-real form, without point correction.
    #[arg(long, requires = "value", conflicts_with = "im")]
    pure: bool,
    /// Print the packed binary form as hex instead of trits.
    #[arg(long)]
    binary: bool,
}

#[derive(Copy, Clone, ValueEnum)]
enum BinarySystem {
    Ieee,
    Posit,
}

#[derive(Args)]
struct DecodeArgs {
    #[arg(long, conflicts_with_all = ["hex", "system"])]
    field: Option<String>,
    /// Packed binary trit form, as hex.
    #[arg(long, conflicts_with = "system")]
    hex: Option<String>,
    /// Read the field as a pure-real form only.
    #[arg(long)]
    pure: bool,
    /// Decode a binary code of another system instead.
    #[arg(long, value_enum, requires_all = ["n", "bits"])]
    system: Option<BinarySystem>,
    #[arg(long = "N")]
    n: Option<u32>,
    #[arg(long)]
    es: Option<u32>,
    /// Code as `0x` hex or decimal.
    #[arg(long)]
    bits: Option<String>,
}

#[derive(Args)]
struct InspectArgs {
    #[arg(long)]
    field: String,
}

#[derive(Args)]
struct EnumerateArgs {
    #[arg(long = "N")]
    n: usize,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct PbomArgs {
    #[arg(long, value_delimiter = ',', default_value = "ieee,posit,nonadj")]
    systems: Vec<String>,
    #[arg(long = "N", value_delimiter = ',', default_value = "8")]
    n: Vec<u32>,
    /// Posit es, instead of log2(N) - 3.
    #[arg(long)]
    es: Option<u32>,
    #[arg(long, default_value = "-700:700", allow_hyphen_values = true, value_parser = parse_range)]
    range: (i64, i64),
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct MeritArgs {
    #[arg(long, value_delimiter = ',', default_value = "ieee,posit,nonadj")]
    systems: Vec<String>,
    #[arg(long = "N", value_delimiter = ',', default_value = "8,16,32,64")]
    n: Vec<u32>,
    #[arg(long)]
    out: Option<PathBuf>,
}

fn parse_range(s: &str) -> std::result::Result<(i64, i64), String> {
    let (a, b) = s.split_once(':').ok_or("expected lo:hi")?;
    let lo = a.trim().parse().map_err(|e| format!("{a}: {e}"))?;
    let hi = b.trim().parse().map_err(|e| format!("{b}: {e}"))?;
    Ok((lo, hi))
}

fn parse_int(s: &str) -> Result<BigInt> {
    s.trim()
        .parse()
        .map_err(|_| Error::InvalidNumber(s.to_string()))
}

fn parse_value(s: &str) -> Result<Dyadic> {
    s.parse()
}

fn parse_bits(s: &str) -> Result<u64> {
    let t = s.trim();
    let r = match t.strip_prefix("0x").or_else(|| t.strip_prefix("0X")) {
        Some(h) => u64::from_str_radix(&h.replace('_', ""), 16),
        None => t.parse(),
    };
    r.map_err(|_| Error::InvalidNumber(s.to_string()))
}

fn parse_hex_bytes(s: &str) -> Result<Vec<u8>> {
    let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if t.len() % 2 != 0 {
        return Err(Error::MalformedBinary("odd number of hex digits"));
    }
    (0..t.len())
        .step_by(2)
        .map(|i| {
            u8::from_str_radix(&t[i..i + 2], 16).map_err(|_| Error::MalformedBinary("not hex"))
        })
        .collect()
}

fn output(path: &Option<PathBuf>) -> Result<Box<dyn Write>> {
    Ok(match path {
        Some(p) => Box::new(BufWriter::new(
            File::create(p).map_err(|e| Error::Unsupported(e.to_string()))?,
        )),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

fn io_err(e: impl std::fmt::Display) -> Error {
    Error::Unsupported(format!("write failed: {e}"))
}

fn recode(a: RecodeArgs, out: &mut dyn Write) -> Result<()> {
    if let Some(s) = a.source.int {
        return writeln!(out, "{}", recode_oracle(&parse_int(&s)?).render()).map_err(io_err);
    }
    let f = parse_trits(a.source.field.as_deref().unwrap())?;
    if a.trace {
        let t = chain_trace(&f);
        let j: String = t.j.iter().map(|&b| if b { '1' } else { '0' }).collect();
        writeln!(
            out,
            "x {f}\na {}\nj {j}\nz {}",
            t.assistant.render(),
            t.output
        )
        .map_err(io_err)?;
    }
    writeln!(out, "{}", recode_chain(&f)?.render()).map_err(io_err)
}

fn round_to(x: &Dyadic, width: usize) -> Result<Dyadic> {
    if x.is_zero() {
        return Ok(Dyadic::zero());
    }
    decode_real(&round_real(x, width)?)
}

fn encode(a: EncodeArgs, out: &mut dyn Write) -> Result<()> {
    let n = a.n;
    let field = if let Some(v) = &a.value {
        let mut re = parse_value(v)?;
        let mut im =
            a.im.as_deref()
                .map(parse_value)
                .transpose()?
                .unwrap_or_else(Dyadic::zero);
        if a.pure {
            if a.round {
                round_real(&re, n)?
            } else {
                encode_real(&re, n)?
            }
        } else {
            if a.round {
                let w = if !re.is_zero() && !im.is_zero() {
                    n / 2
                } else {
                    n
                };
                re = round_to(&re, w)?;
                im = round_to(&im, w)?;
            }
            encode_entity(&DecodedEntity::Complex { re, im }, n)?
        }
    } else if let Some(k) = &a.int {
        encode_entity(&DecodedEntity::Integer(parse_int(k)?), n)?
    } else if let Some(inf) = a.inf {
        let e = match inf {
            Infinity::Pos => DecodedEntity::PlusInf,
            Infinity::Neg => DecodedEntity::MinusInf,
            Infinity::Complex => DecodedEntity::ComplexInf,
        };
        encode_entity(&e, n)?
    } else {
        return Err(Error::InvalidArgument(
            "one of --value, --int or --inf is required".into(),
        ));
    };
    if a.binary {
        let hex: String = pack_binary(&field)?
            .iter()
            .map(|b| format!("{b:02x}"))
            .collect();
        writeln!(out, "{hex}").map_err(io_err)
    } else {
        writeln!(out, "{field}").map_err(io_err)
    }
}

fn decode(a: DecodeArgs, out: &mut dyn Write) -> Result<()> {
    if let Some(sys) = a.system {
        let n = a.n.unwrap();
        let kind = match sys {
            BinarySystem::Ieee => SystemKind::Ieee,
            BinarySystem::Posit => SystemKind::Posit,
        };
        let model = match a.es {
            Some(es) => SystemModel::with_param(kind, n, es)?,
            None => SystemModel::new(kind, n)?,
        };
        let v = model
            .decode(parse_bits(a.bits.as_deref().unwrap())?)
            .expect("binary system")?;
        return writeln!(out, "{v}").map_err(io_err);
    }
    let f = match (&a.field, &a.hex) {
        (Some(s), _) => parse_trits(s)?,
        (None, Some(h)) => unpack_binary(&parse_hex_bytes(h)?)?,
        (None, None) => {
            return Err(Error::InvalidArgument(
                "one of --field, --hex or --system is required".into(),
            ))
        }
    };
    if a.pure {
        writeln!(out, "{}", decode_real(&f)?.describe()).map_err(io_err)
    } else {
        writeln!(out, "{}", classify(&f)?).map_err(io_err)
    }
}

fn inspect(a: InspectArgs, out: &mut dyn Write) -> Result<()> {
    let f = parse_trits(&a.field)?;
    let mut lines = vec![format!("field {f}"), format!("width {}", f.width())];
    let pts: Vec<String> = find_points(&f)
        .iter()
        .map(|p| format!("{}@{}", p.class(), p.start))
        .collect();
    lines.push(format!(
        "points {}",
        if pts.is_empty() {
            "none".to_string()
        } else {
            pts.join(" ")
        }
    ));
    lines.push(format!("signature {}", point_signature(&f)));
    lines.push(match classify(&f) {
        Ok(e) => format!("meaning {e}"),
        Err(e) => format!("meaning none ({})", e.code()),
    });
    lines.push(format!("integer {}", f.int_value()));
    match parse_real(&f) {
        Ok(parts) => {
            lines.push(format!("pure-real {}", parts.value().describe()));
            lines.push(format!("exponent {}", parts.n));
            lines.push(format!("significand {}", parts.m));
            lines.push(format!("precision {}", parts.precision));
            lines.push(format!("ulp {}", parts.ulp().describe()));
            lines.push(format!("key {}", comparison_key(&f)?));
        }
        Err(e) => lines.push(format!("pure-real none ({})", e.code())),
    }
    writeln!(out, "{}", lines.join("\n")).map_err(io_err)
}

fn enumerate(a: EnumerateArgs) -> Result<()> {
    let mut rows = enumerate_real(a.n)?;
    rows.push((TritField::zeros(a.n), Dyadic::zero()));
    rows.sort_by(|x, y| x.1.cmp(&y.1));
    let mut w = csv::Writer::from_writer(output(&a.out)?);
    w.write_record(["field", "value"]).map_err(io_err)?;
    for (f, x) in rows {
        w.write_record([f.render(), x.to_decimal_string()])
            .map_err(io_err)?;
    }
    w.flush().map_err(io_err)
}

fn models(systems: &[String], widths: &[u32], es: Option<u32>) -> Result<Vec<SystemModel>> {
    let mut out = Vec::new();
    for s in systems {
        let kind: SystemKind = s.parse()?;
        for &n in widths {
            out.push(match (kind, es) {
                (SystemKind::Posit, Some(es)) => SystemModel::with_param(kind, n, es)?,
                _ => SystemModel::new(kind, n)?,
            });
        }
    }
    Ok(out)
}

fn pbom(a: PbomArgs) -> Result<()> {
    let ms = models(&a.systems, &a.n, a.es)?;
    let rows = pbom_sweep(&ms, a.range.0, a.range.1)?;
    let mut w = csv::Writer::from_writer(output(&a.out)?);
    w.write_record(PBOM_CSV_HEADER).map_err(io_err)?;
    for r in rows {
        w.write_record(r.csv_record()).map_err(io_err)?;
    }
    w.flush().map_err(io_err)
}

fn merit_table(a: MeritArgs) -> Result<()> {
    let ms = models(&a.systems, &a.n, None)?;
    let mut w = csv::Writer::from_writer(output(&a.out)?);
    w.write_record(MERIT_CSV_HEADER).map_err(io_err)?;
    for m in ms {
        w.write_record(merit(&m)?.csv_record()).map_err(io_err)?;
    }
    w.flush().map_err(io_err)
}

fn run(cli: Cli) -> Result<()> {
    let mut stdout = BufWriter::new(io::stdout().lock());
    let r = match cli.command {
        Command::Recode(a) => recode(a, &mut stdout),
        Command::Encode(a) => encode(a, &mut stdout),
        Command::Decode(a) => decode(a, &mut stdout),
        Command::Inspect(a) => inspect(a, &mut stdout),
        Command::Enumerate(a) => enumerate(a),
        Command::Pbom(a) => pbom(a),
        Command::Merit(a) => merit_table(a),
    };
    stdout.flush().map_err(io_err)?;
    r
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {}: {e}", e.code());
            ExitCode::from(1)
        }
    }
}
