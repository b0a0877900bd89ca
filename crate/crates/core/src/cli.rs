//! Command-line front end.

use std::fmt::Write as _;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::analysis::{an_class_splits, reality_report};
use crate::braiding::rack_decomposition;
use crate::cartan::budget_from_env;
use crate::error::{Error, Result};
use crate::group::{parse_group, FiniteGroup};
use crate::reps::parse_rep;
use crate::screen::{
    scan_an_with, summarize_dn, table_dn_with, ClassContext, ScreenOptions, ScreenRecord, ScreenRow,
};

#[derive(Parser, Debug)]
#[command(name = "nichols", version, about = "Screen Nichols algebras of Yetter-Drinfeld modules over finite groups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Worker threads for scans (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Symmetrizer budget (overrides NICHOLS_BUDGET).
    #[arg(long, global = true)]
    budget: Option<u128>,
    /// Degree cap for Hilbert series confirmations.
    #[arg(long, global = true)]
    max_degree: Option<usize>,
}

/// Output format.
#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List conjugacy classes with sizes and centralizers.
    Classes(GroupArg),
    /// Screen one (class, representation) pair.
    Screen(ScreenArgs),
    /// Screen every class of D_n, for each n given.
    TableDn {
        /// Comma-separated list, e.g. 5,7,9.
        #[arg(long, value_delimiter = ',', required = true)]
        n: Vec<u32>,
    },
    /// Screen every class of A_n, 4 <= n <= 8.
    ScanAn {
        #[arg(long)]
        n: usize,
    },
    /// Split the reflections of D_n (n odd) into copies of the reflections of D_d.
    RackDecompose {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        d: u32,
    },
    /// Reality of a class, with witnesses.
    Reality(ClassArgs),
}

#[derive(Args, Debug)]
struct GroupArg {
    /// Group spec: Sn:<n>, An:<n>, Dn:<n>, Zn:<n>.
    #[arg(long)]
    group: String,
}

#[derive(Args, Debug)]
struct ClassArgs {
    #[arg(long)]
    group: String,
    /// Class representative: cycle notation or x^a*y^b.
    #[arg(long)]
    class: String,
}

#[derive(Args, Debug)]
struct ScreenArgs {
    #[arg(long)]
    group: String,
    #[arg(long)]
    class: String,
    /// Irrep of the centralizer: eps, sgn, sgn⊗eps, chi:<l>, chi:(l1,l2), rho:<k>.
    #[arg(long)]
    rep: String,
}

/// Exit code and rendered streams of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::BudgetExceeded { .. } => 3,
        _ => 2,
    }
}

/// Parses `argv` (program name first) and executes the verb.
pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => Outcome {
                    code: 0,
                    stdout: text,
                    stderr: String::new(),
                },
                _ => Outcome {
                    code: 2,
                    stdout: String::new(),
                    stderr: text,
                },
            };
        }
    };
    let result = match cli.jobs {
        Some(j) => match rayon::ThreadPoolBuilder::new().num_threads(j.max(1)).build() {
            Ok(pool) => pool.install(|| execute(&cli)),
            Err(e) => Err(Error::InvalidArgument(e.to_string())),
        },
        None => execute(&cli),
    };
    match result {
        Ok(stdout) => Outcome {
            code: 0,
            stdout,
            stderr: String::new(),
        },
        Err(e) => Outcome {
            code: exit_code(&e),
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        },
    }
}

fn options(cli: &Cli) -> ScreenOptions {
    ScreenOptions {
        budget: cli.budget.unwrap_or_else(budget_from_env),
        max_degree: cli.max_degree,
        ..ScreenOptions::default()
    }
}

fn execute(cli: &Cli) -> Result<String> {
    match &cli.command {
        Command::Classes(a) => classes(&parse_group(&a.group)?, cli.format),
        Command::Screen(a) => {
            let group = parse_group(&a.group)?;
            let s = group.parse_element(&a.class)?;
            let ctx = ClassContext::with_options(&group, group.conjugacy_class(&s)?, options(cli))?;
            let rho = parse_rep(ctx.centralizer(), &a.rep)?;
            let row = ctx.screen_row(&rho)?;
            Ok(match cli.format {
                Format::Text => render_record_text(&row.record),
                _ => render_rows(&[row], cli.format)?,
            })
        }
        Command::TableDn { n } => {
            let mut out = String::new();
            for &k in n {
                let rows = table_dn_with(k, options(cli))?;
                if cli.format == Format::Text {
                    let _ = writeln!(out, "D_{k}");
                    out.push_str(&render_rows(&rows, Format::Text)?);
                    out.push('\n');
                    out.push_str(&render_summary(&rows));
                    out.push('\n');
                } else if cli.format == Format::Csv && !out.is_empty() {
                    // one header for the whole output
                    let body = render_rows(&rows, Format::Csv)?;
                    out.push_str(body.split_once('\n').map_or("", |(_, rest)| rest));
                } else {
                    out.push_str(&render_rows(&rows, cli.format)?);
                }
            }
            Ok(out)
        }
        Command::ScanAn { n } => render_rows(&scan_an_with(*n, options(cli))?, cli.format),
        Command::RackDecompose { n, d } => {
            let group = FiniteGroup::dihedral(*n)?;
            let class = group.conjugacy_class(&group.parse_element("x")?)?;
            let r = rack_decomposition(&class, *d)?;
            let verified = r.verify(&class);
            let blocks: Vec<Vec<String>> = r
                .blocks
                .iter()
                .map(|b| b.iter().map(|&i| class.element(i).to_string()).collect())
                .collect();
            let images: Vec<Vec<String>> = r
                .isomorphisms
                .iter()
                .map(|b| b.iter().map(|g| g.to_string()).collect())
                .collect();
            Ok(match cli.format {
                Format::Json => {
                    json!({"n": n, "d": d, "blocks": blocks, "images": images, "verified": verified}).to_string() + "\n"
                }
                Format::Csv => {
                    let mut w = csv::Writer::from_writer(Vec::new());
                    write_csv(&mut w, &["block", "element", "image"])?;
                    for (k, (b, im)) in blocks.iter().zip(&images).enumerate() {
                        for (e, i) in b.iter().zip(im) {
                            write_csv(&mut w, &[&k.to_string(), e, i])?;
                        }
                    }
                    finish_csv(w)?
                }
                Format::Text => {
                    let mut out = format!("reflections of D_{n} as {} copies of the reflections of D_{d}\n", blocks.len());
                    for (k, (b, im)) in blocks.iter().zip(&images).enumerate() {
                        let pairs: Vec<String> = b.iter().zip(im).map(|(e, i)| format!("{e} -> {i}")).collect();
                        let _ = writeln!(out, "block {k}: {}", pairs.join(", "));
                    }
                    let _ = writeln!(out, "verified: {verified}");
                    out
                }
            })
        }
        Command::Reality(a) => {
            let group = parse_group(&a.group)?;
            let s = group.parse_element(&a.class)?;
            let r = reality_report(&group, &s)?;
            let splits = match s.as_perm() {
                Some(p) if matches!(group.kind(), crate::group::GroupKind::Alternating(_)) => {
                    Some(an_class_splits(&p.cycle_type())?)
                }
                _ => None,
            };
            let show = |g: &Option<crate::group::GroupElement>| g.as_ref().map(|g| g.to_string());
            Ok(match cli.format {
                Format::Json => {
                    let mut v = json!({
                        "group": group.kind().to_string(),
                        "element": s.to_string(),
                        "real": r.is_real,
                        "absolutely_real": r.is_absolutely_real,
                        "inverting_witness": show(&r.inverting_witness),
                        "involution_witness": show(&r.involution_witness),
                    });
                    if let Some(sp) = splits {
                        v["splits"] = json!(sp);
                    }
                    v.to_string() + "\n"
                }
                Format::Csv => {
                    let mut w = csv::Writer::from_writer(Vec::new());
                    write_csv(
                        &mut w,
                        &["group", "element", "real", "absolutely_real", "inverting_witness", "involution_witness", "splits"],
                    )?;
                    write_csv(
                        &mut w,
                        &[
                            &group.kind().to_string(),
                            &s.to_string(),
                            &r.is_real.to_string(),
                            &r.is_absolutely_real.to_string(),
                            &show(&r.inverting_witness).unwrap_or_default(),
                            &show(&r.involution_witness).unwrap_or_default(),
                            &splits.map(|b| b.to_string()).unwrap_or_default(),
                        ],
                    )?;
                    finish_csv(w)?
                }
                Format::Text => {
                    let mut out = String::new();
                    let _ = writeln!(out, "element: {s}");
                    let _ = writeln!(out, "real: {}", r.is_real);
                    let _ = writeln!(out, "absolutely real: {}", r.is_absolutely_real);
                    if let Some(g) = show(&r.inverting_witness) {
                        let _ = writeln!(out, "inverted by: {g}");
                    }
                    if let Some(g) = show(&r.involution_witness) {
                        let _ = writeln!(out, "inverting involution: {g}");
                    }
                    if let Some(sp) = splits {
                        let _ = writeln!(out, "class splits from the symmetric group: {sp}");
                    }
                    out
                }
            })
        }
    }
}

fn classes(group: &FiniteGroup, format: Format) -> Result<String> {
    let header = ["representative", "size", "order", "centralizer"];
    let rows: Vec<[String; 4]> = group
        .conjugacy_classes()
        .iter()
        .map(|c| {
            let cent = group.centralizer(c.base()).map(|h| h.label().to_string());
            Ok([
                c.base().to_string(),
                c.len().to_string(),
                c.base().order().to_string(),
                cent?,
            ])
        })
        .collect::<Result<_>>()?;
    Ok(match format {
        Format::Json => {
            let mut out = String::new();
            for r in &rows {
                let v = json!({
                    "representative": r[0],
                    "size": r[1].parse::<usize>().unwrap_or(0),
                    "order": r[2].parse::<u64>().unwrap_or(0),
                    "centralizer": r[3],
                });
                out.push_str(&v.to_string());
                out.push('\n');
            }
            out
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            write_csv(&mut w, &header)?;
            for r in &rows {
                write_csv(&mut w, r)?;
            }
            finish_csv(w)?
        }
        Format::Text => text_table(&header, &rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>()),
    })
}

fn write_csv<S: AsRef<str>>(w: &mut csv::Writer<Vec<u8>>, fields: &[S]) -> Result<()> {
    w.write_record(fields.iter().map(|f| f.as_ref()))
        .map_err(|e| Error::InvalidArgument(e.to_string()))
}

fn finish_csv(w: csv::Writer<Vec<u8>>) -> Result<String> {
    let bytes = w.into_inner().map_err(|e| Error::InvalidArgument(e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| Error::InvalidArgument(e.to_string()))
}

fn text_table(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = header.iter().map(|h| h.chars().count()).collect();
    for r in rows {
        for (w, c) in widths.iter_mut().zip(r) {
            *w = (*w).max(c.chars().count());
        }
    }
    let line = |cells: Vec<&str>| {
        let padded: Vec<String> = cells
            .iter()
            .zip(&widths)
            .map(|(c, w)| format!("{c}{}", " ".repeat(w - c.chars().count())))
            .collect();
        padded.join("  ").trim_end().to_string() + "\n"
    };
    let mut out = line(header.to_vec());
    for r in rows {
        out.push_str(&line(r.iter().map(String::as_str).collect()));
    }
    out
}

/// JSON Lines, CSV with a header, or an aligned text table.
pub fn render_rows(rows: &[ScreenRow], format: Format) -> Result<String> {
    match format {
        Format::Json => {
            let mut out = String::new();
            for r in rows {
                out.push_str(&serde_json::to_string(&r.record).map_err(|e| Error::InvalidArgument(e.to_string()))?);
                out.push('\n');
            }
            Ok(out)
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            write_csv(&mut w, &ScreenRecord::FIELDS)?;
            for r in rows {
                write_csv(&mut w, &r.record.csv_fields())?;
            }
            finish_csv(w)
        }
        Format::Text => {
            let header = ["class", "size", "centralizer", "rep", "q_ss", "verdict", "rule"];
            let body: Vec<Vec<String>> = rows
                .iter()
                .map(|r| {
                    let rec = &r.record;
                    let rule = rec
                        .reasons
                        .last()
                        .map(|x| x.split(':').next().unwrap_or("").to_string())
                        .unwrap_or_default();
                    vec![
                        rec.class_rep.clone(),
                        rec.class_size.to_string(),
                        rec.centralizer.clone(),
                        rec.rep.clone(),
                        rec.q_ss.clone(),
                        rec.summary(),
                        rule,
                    ]
                })
                .collect();
            Ok(text_table(&header, &body))
        }
    }
}

fn render_record_text(r: &ScreenRecord) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "group: {}", r.group);
    let _ = writeln!(out, "class: {} (size {})", r.class_rep, r.class_size);
    let _ = writeln!(out, "centralizer: {}", r.centralizer);
    let _ = writeln!(out, "rep: {}", r.rep);
    let _ = writeln!(out, "q_ss: {}", r.q_ss);
    let _ = writeln!(out, "verdict: {}", r.verdict);
    if let Some(d) = r.dimension {
        let _ = writeln!(out, "dimension: {d}");
    }
    let _ = writeln!(out, "negative braiding: {}", r.negative_braiding);
    for x in &r.reasons {
        let _ = writeln!(out, "  - {x}");
    }
    if let Some(w) = &r.witness {
        let _ = writeln!(out, "witness: {w}");
    }
    out
}

fn render_summary(rows: &[ScreenRow]) -> String {
    let lines = summarize_dn(rows);
    let body: Vec<Vec<String>> = lines
        .iter()
        .map(|l| vec![l.family.clone(), l.reps.join(", "), l.verdict.clone()])
        .collect();
    let mut out = String::from("summary\n");
    out.push_str(&text_table(&["orbit", "reps", "dim B(V)"], &body));
    out
}
