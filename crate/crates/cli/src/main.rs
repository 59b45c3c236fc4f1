//! `cage8`: build cages and derived girth-8 graphs, export them, and verify
//! exported files.
//!
//! Exit codes: 0 success, 1 I/O failure, 2 invalid input, 3 a verification
//! or domination check failed.

use std::fs::File;
use std::io::{BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use cage8::cage::{build_b, build_gamma, build_gamma_staged, build_h, moore_bound};
use cage8::field::prime_power;
use cage8::io::{read_graph, read_set, write_graph, write_metadata, write_set, Format, Metadata};
use cage8::pds::{derive, DeriveParams, Family};
use cage8::{BipartiteGraph, Error, Field, GammaLayout, Vertex, VertexId};
use clap::{Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(
    name = "cage8",
    version,
    about = "Explicit (q+1,8)-cages and derived girth-8 graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build Γ_q, H_q, B_q or the staged Γ_q.
    Construct {
        #[arg(long)]
        q: u64,
        #[arg(long, value_enum, default_value_t = BaseFamily::Gamma)]
        family: BaseFamily,
        #[arg(long, value_enum, default_value_t = OutFormat::Edgelist)]
        format: OutFormat,
        /// Output file; a `.meta.json` sidecar is written next to it.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Remove a perfect dominating set from Γ_q (or S from G_q).
    Derive {
        #[arg(long)]
        q: u64,
        #[arg(long, value_enum)]
        remove: RemoveFamily,
        /// Field element index.
        #[arg(long)]
        xi: Option<u32>,
        /// Vertex id in Γ_q or a label such as `0:(inf,inf,inf)`.
        #[arg(long)]
        alpha: Option<String>,
        #[arg(long)]
        beta: Option<String>,
        #[arg(long, value_enum, default_value_t = OutFormat::Edgelist)]
        format: OutFormat,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Also write the removed set (ids of the base graph, one per line).
        #[arg(long)]
        set_out: Option<PathBuf>,
    },
    /// Check properties of an exported graph; the format follows the
    /// extension (.edges, .dimacs, .g6).
    Verify {
        file: PathBuf,
        #[arg(long)]
        girth: Option<u32>,
        #[arg(long)]
        regular: Option<usize>,
        #[arg(long)]
        bipartite: bool,
        /// File of vertex ids that must form a perfect dominating set.
        #[arg(long)]
        pds: Option<PathBuf>,
    },
    /// Print the order and set-size formulas for q.
    Info {
        #[arg(long)]
        q: u64,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum BaseFamily {
    Gamma,
    H,
    B,
    GammaStaged,
}

#[derive(Clone, Copy, ValueEnum)]
enum RemoveFamily {
    #[value(name = "A")]
    A,
    #[value(name = "B")]
    B,
    #[value(name = "C")]
    C,
    #[value(name = "Cprime")]
    Cprime,
    #[value(name = "S")]
    S,
}

impl From<RemoveFamily> for Family {
    fn from(f: RemoveFamily) -> Family {
        match f {
            RemoveFamily::A => Family::A,
            RemoveFamily::B => Family::B,
            RemoveFamily::C => Family::C,
            RemoveFamily::Cprime => Family::CPrime,
            RemoveFamily::S => Family::S,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum OutFormat {
    Edgelist,
    Dimacs,
    Graph6,
}

impl From<OutFormat> for Format {
    fn from(f: OutFormat) -> Format {
        match f {
            OutFormat::Edgelist => Format::Edgelist,
            OutFormat::Dimacs => Format::Dimacs,
            OutFormat::Graph6 => Format::Graph6,
        }
    }
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Io(_) | Error::Json(_) => 1,
        Error::PdsViolation(_) | Error::ExpectationMismatch { .. } => 3,
        _ => 2,
    }
}

fn main() -> ExitCode {
    match run(Cli::parse().command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}

fn run(cmd: Command) -> Result<ExitCode, Error> {
    match cmd {
        Command::Construct {
            q,
            family,
            format,
            out,
        } => construct(q, family, format.into(), out.as_deref()),
        Command::Derive {
            q,
            remove,
            xi,
            alpha,
            beta,
            format,
            out,
            set_out,
        } => {
            let field = Field::new(q)?;
            let params = DeriveParams {
                xi: xi.map(|i| field.element(i)).transpose()?,
                alpha: alpha.as_deref().map(|s| parse_vertex(q, s)).transpose()?,
                beta: beta.as_deref().map(|s| parse_vertex(q, s)).transpose()?,
            };
            derive_cmd(
                &field,
                remove.into(),
                &params,
                format.into(),
                out.as_deref(),
                set_out.as_deref(),
            )
        }
        Command::Verify {
            file,
            girth,
            regular,
            bipartite,
            pds,
        } => verify(&file, girth, regular, bipartite, pds.as_deref()),
        Command::Info { q } => info(q),
    }
}

fn summary(g: &BipartiteGraph) -> String {
    let degree = g
        .regular_degree()
        .map_or_else(|| format!("{:?}", g.degree_profile()), |d| d.to_string());
    let girth = g
        .girth()
        .map_or_else(|| "inf".to_string(), |x| x.to_string());
    format!("order={} degree={degree} girth={girth}", g.order())
}

fn sidecar(path: &Path) -> PathBuf {
    let mut s = path.as_os_str().to_owned();
    s.push(".meta.json");
    PathBuf::from(s)
}

fn write_outputs(
    g: &BipartiteGraph,
    meta: &Metadata,
    format: Format,
    out: &Path,
) -> Result<(), Error> {
    let mut w = BufWriter::new(File::create(out)?);
    write_graph(g, format, &mut w)?;
    w.flush()?;
    let mut m = BufWriter::new(File::create(sidecar(out))?);
    write_metadata(meta, &mut m)?;
    m.flush()?;
    Ok(())
}

fn construct(
    q: u64,
    family: BaseFamily,
    format: Format,
    out: Option<&Path>,
) -> Result<ExitCode, Error> {
    let (g, name) = match family {
        BaseFamily::Gamma => (build_gamma(q)?, "gamma"),
        BaseFamily::H => (build_h(q)?, "h"),
        BaseFamily::B => (build_b(q)?, "b"),
        BaseFamily::GammaStaged => {
            let staged = build_gamma_staged(q)?;
            for s in &staged.stages {
                let girth = s.girth.map_or_else(|| "inf".to_string(), |x| x.to_string());
                println!("stage {} order={} girth={girth}", s.stage.name(), s.order);
            }
            (staged.graph, "gamma-staged")
        }
    };
    let field = g.require_field()?.clone();
    let meta = Metadata::describe(&g, &field, name, None);
    if let Some(out) = out {
        write_outputs(&g, &meta, format, out)?;
    }
    println!("{}", summary(&g));
    Ok(ExitCode::SUCCESS)
}

/// A vertex id in Γ_q, or a label `side:(a,b,c)`.
fn parse_vertex(q: u64, s: &str) -> Result<Vertex, Error> {
    let layout = GammaLayout::new(q as u32);
    if let Ok(id) = s.trim().parse::<VertexId>() {
        if id >= layout.order() {
            return Err(Error::IdOutOfRange(id));
        }
        return Ok(layout.vertex(id));
    }
    let v: Vertex = s.parse().map_err(Error::InvalidVertex)?;
    layout.local_id(&v)?;
    Ok(v)
}

fn derive_cmd(
    field: &Field,
    family: Family,
    params: &DeriveParams,
    format: Format,
    out: Option<&Path>,
    set_out: Option<&Path>,
) -> Result<ExitCode, Error> {
    let d = derive(field.q() as u64, family, params)?;
    let meta = Metadata::describe(&d.graph, field, family.as_str(), Some(&d.spec));
    if let Some(out) = out {
        write_outputs(&d.graph, &meta, format, out)?;
    }
    if let Some(path) = set_out {
        let mut w = BufWriter::new(File::create(path)?);
        write_set(&d.removed, &mut w)?;
        w.flush()?;
    }
    println!("removed={} {}", d.removed.len(), summary(&d.graph));
    Ok(ExitCode::SUCCESS)
}

fn verify(
    file: &Path,
    girth: Option<u32>,
    regular: Option<usize>,
    bipartite: bool,
    pds: Option<&Path>,
) -> Result<ExitCode, Error> {
    let format = Format::from_path(file).ok_or_else(|| Error::Parse {
        line: 0,
        message: format!("cannot infer format from {}", file.display()),
    })?;
    let g = read_graph(format, BufReader::new(File::open(file)?))?;
    println!("{}", summary(&g));
    let mut all = true;
    let mut report = |name: &str, ok: bool, detail: String| {
        all &= ok;
        println!("{} {name} {detail}", if ok { "PASS" } else { "FAIL" });
    };
    if let Some(want) = girth {
        let got = g.girth();
        report(
            "girth",
            got == Some(want),
            format!("expected={want} actual={got:?}"),
        );
    }
    if let Some(want) = regular {
        let got = g.regular_degree();
        report(
            "regular",
            got == Some(want),
            format!("expected={want} actual={:?}", g.degree_profile()),
        );
    }
    if bipartite {
        report("bipartite", g.is_bipartite(), String::new());
    }
    if let Some(path) = pds {
        let set = read_set(BufReader::new(File::open(path)?))?;
        if let Some(bad) = set.iter().find(|&v| v as usize >= g.order()) {
            return Err(Error::IdOutOfRange(bad));
        }
        let misses = g.domination_failures(&set).len();
        report(
            "pds",
            misses == 0,
            format!("size={} misses={misses}", set.len()),
        );
    }
    Ok(if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(3)
    })
}

fn info(q: u64) -> Result<ExitCode, Error> {
    let (p, _) = prime_power(q).ok_or(Error::NotAPrimePower(q))?;
    let field = Field::new(q)?;
    let row = |name: &str, value: String| println!("{name:<26}{value}");
    let na = |why: &str| format!("n/a ({why})");
    let n = 2 * (q * q * q + q * q + q + 1);
    let mb = moore_bound(q + 1, 8);
    println!("q={q} p={p} n={} modulus={:?}", field.n(), field.modulus());
    row("|V(Gamma_q)|", n.to_string());
    row("moore_bound(q+1,8)", mb.to_string());
    row("excess", (n as i64 - mb as i64).to_string());
    row("|A|", (2 * (q + 1) * (q + 1)).to_string());
    row("|B|", (2 * (q * q + 3 * q + 1)).to_string());
    let c_size = (2 * (q * q + 4 * q + 3)).to_string();
    let even = p == 2;
    row(
        "|C|",
        if even && q >= 8 {
            c_size.clone()
        } else {
            na("needs even q >= 8")
        },
    );
    row("|C'|", if q == 4 { c_size } else { na("q = 4 only") });
    row(
        "|S|",
        if q >= 4 {
            (4 * q * q - 6 * q).to_string()
        } else {
            na("needs q >= 4")
        },
    );
    row("order Gamma_q - A", (2 * q * (q * q - 1)).to_string());
    row("order Gamma_q - B", (2 * q * (q * q - 2)).to_string());
    row(
        "order Gamma_q - C / C'",
        if even && q >= 4 {
            (2 * (q * q * q - 3 * q - 2)).to_string()
        } else {
            na("needs even q >= 4")
        },
    );
    row(
        "order G_q - S",
        if q >= 4 {
            (2 * q * (q - 1) * (q - 1)).to_string()
        } else {
            na("needs q >= 4")
        },
    );
    Ok(ExitCode::SUCCESS)
}
