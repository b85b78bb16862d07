use std::fmt::Write as _;
use std::io::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use spaceform_cli::{catalog, report, verify, CliError};
use spaceform_core::cohomology::{build_extension, cocycle_space};
use spaceform_core::group::{load_group, write_table, GroupSpec};
use spaceform_core::spaceform::{classify, SpaceFormInstance};
use spaceform_core::FiniteGroup;

#[derive(Parser)]
#[command(
    name = "spaceform",
    version,
    about = "Decide whether the space of positive-scalar-curvature metrics on a \
             spherical space form has infinitely many path components"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Classify a (dimension, fundamental group) instance
    Classify(ClassifyArgs),
    /// Run the verification suites over the bundled catalog
    Verify(VerifyArgs),
    /// Print cocycle/coboundary dimensions and the class count for a group
    H2 {
        /// Group spec, e.g. C6, D7, Q16, C3xQ8, C5:C4@r2
        spec: String,
    },
    /// Print one extension class in full: total-group table, the central
    /// element z, and the per-element fiber order profile
    ExtensionReport {
        spec: String,
        /// Index into the class list printed by `h2`
        class_index: usize,
    },
    /// List the bundled group catalog
    Catalog {
        #[arg(long, default_value_t = 64)]
        max_order: usize,
    },
}

#[derive(Args)]
struct ClassifyArgs {
    /// Dimension n of the space form (n >= 5 is in scope)
    #[arg(short = 'n', long = "dimension")]
    dimension: usize,
    /// Group spec, e.g. C6, D7, Q16, C3xQ8, C5:C4@r2
    #[arg(
        short = 'g',
        long = "group",
        required_unless_present = "group_file",
        conflicts_with = "group_file"
    )]
    group: Option<String>,
    /// Cayley-table file (first line order, then one row per line,
    /// optional label line)
    #[arg(long = "group-file")]
    group_file: Option<PathBuf>,
    /// Whether the alpha invariant of the universal cover vanishes; only
    /// consulted when n ≡ 1, 2 mod 8 with |G| odd
    #[arg(long = "alpha-vanishes")]
    alpha_vanishes: Option<bool>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args)]
struct VerifyArgs {
    /// Cap on catalog group orders (each suite also applies its own cap)
    #[arg(long, default_value_t = 48)]
    max_order: usize,
    /// Suite name; repeatable; all suites when omitted
    #[arg(long = "suite")]
    suites: Vec<String>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok((output, code)) => {
            // Ignore write failures (e.g. a closed pipe): the computation
            // itself succeeded.
            let _ = std::io::stdout().write_all(output.as_bytes());
            ExitCode::from(code)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}

fn run(cli: Cli) -> Result<(String, u8), CliError> {
    match cli.command {
        Command::Classify(args) => cmd_classify(args),
        Command::Verify(args) => cmd_verify(args),
        Command::H2 { spec } => cmd_h2(&spec),
        Command::ExtensionReport { spec, class_index } => cmd_extension_report(&spec, class_index),
        Command::Catalog { max_order } => cmd_catalog(max_order),
    }
}

fn resolve_group(args: &ClassifyArgs) -> Result<(FiniteGroup, String), CliError> {
    match (&args.group, &args.group_file) {
        (Some(spec_text), None) => {
            let spec = GroupSpec::parse(spec_text)?;
            Ok((spec.build()?, spec.text()))
        }
        (None, Some(path)) => Ok((load_group(path)?, path.display().to_string())),
        _ => unreachable!("clap enforces exactly one group source"),
    }
}

fn cmd_classify(args: ClassifyArgs) -> Result<(String, u8), CliError> {
    let (group, name) = resolve_group(&args)?;
    let inst = SpaceFormInstance::new(args.dimension, group, args.alpha_vanishes)?;
    let verdict = classify(&inst)?;
    let report = report::build_report(&inst, name, &verdict);
    let output = match args.format {
        Format::Json => {
            let mut text = serde_json::to_string_pretty(&report).expect("report serializes");
            text.push('\n');
            text
        }
        Format::Text => report::render_text(&report),
    };
    Ok((output, 0))
}

fn cmd_verify(args: VerifyArgs) -> Result<(String, u8), CliError> {
    let outcomes = verify::run_suites(&args.suites, args.max_order)?;
    let code = if outcomes.iter().all(|o| o.passed()) {
        0
    } else {
        1
    };
    Ok((verify::render_table(&outcomes), code))
}

fn cmd_h2(spec_text: &str) -> Result<(String, u8), CliError> {
    let spec = GroupSpec::parse(spec_text)?;
    let group = spec.build()?;
    let space = cocycle_space(&group)?;
    let mut out = String::new();
    let _ = writeln!(out, "group: {} (order {})", spec.text(), group.order());
    let _ = writeln!(out, "2-cocycle space dimension: {}", space.cocycle_rank());
    let _ = writeln!(
        out,
        "coboundary space dimension: {}",
        space.coboundary_rank()
    );
    let _ = writeln!(
        out,
        "H^2 classes: {} (2^{})",
        space.classes().len(),
        space.class_dim()
    );
    for (i, class) in space.classes().iter().enumerate() {
        let kind = if class.is_split_class() {
            "split"
        } else {
            "non-split"
        };
        let _ = writeln!(out, "  class {i}: {kind}");
    }
    Ok((out, 0))
}

fn cmd_extension_report(spec_text: &str, class_index: usize) -> Result<(String, u8), CliError> {
    let spec = GroupSpec::parse(spec_text)?;
    let group = spec.build()?;
    let space = cocycle_space(&group)?;
    let classes = space.classes();
    let Some(class) = classes.get(class_index) else {
        return Err(CliError::ClassIndex {
            index: class_index,
            count: classes.len(),
        });
    };
    let ext = build_extension(&group, class.representative())?;
    let total = ext.total();
    let mut out = String::new();
    let _ = writeln!(out, "group: {} (order {})", spec.text(), group.order());
    let _ = writeln!(
        out,
        "class {class_index} of {}: {}",
        classes.len(),
        if class.is_split_class() {
            "split"
        } else {
            "non-split"
        }
    );
    let _ = writeln!(
        out,
        "total group: order {}, z at index {} ({})",
        total.order(),
        ext.z(),
        total.label(ext.z())
    );
    let _ = writeln!(
        out,
        "fiber order profile (base element: orders of its two lifts):"
    );
    for g in 0..group.order() {
        let [a, b] = ext.fiber_orders(g);
        let _ = writeln!(out, "  {}: [{a}, {b}]", group.label(g));
    }
    let _ = writeln!(out, "total multiplication table:");
    out.push_str(&write_table(total));
    Ok((out, 0))
}

fn cmd_catalog(max_order: usize) -> Result<(String, u8), CliError> {
    let entries = catalog::generate_catalog(max_order)?;
    let mut out = String::new();
    let _ = writeln!(out, "{} groups up to order {max_order}:", entries.len());
    for entry in &entries {
        let _ = writeln!(
            out,
            "  {:<14} order {:>3}  tags: {}",
            entry.spec,
            entry.order(),
            entry.tag_line()
        );
    }
    Ok((out, 0))
}
