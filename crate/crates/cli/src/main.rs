use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use chandraw::document::DrawMode;
use chandraw::layout::OverlapMode;
use chandraw::ordering::DEFAULT_BEST_ORDER_CAP;
use chandraw::pipeline::{
    format_answer, prepare, query_labels, Config, CycleMode, Decompose, OrderMode, PipelineError,
};
use chandraw::svg::render_svg;

#[derive(Parser)]
#[command(
    name = "chandraw",
    version,
    about = "Hierarchical drawings of directed graphs along paths and channels"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Draw a graph as SVG or as a JSON layout document.
    Draw {
        input: PathBuf,
        #[command(flatten)]
        opts: Opts,
        #[arg(long, value_enum, default_value_t = Format::Svg)]
        format: Format,
        /// Pixels per grid unit.
        #[arg(long, default_value_t = 40, value_parser = clap::value_parser!(i64).range(1..))]
        scale: i64,
        /// Write here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print an mc-path or dc-path witness for u reaching v, or `unreachable`.
    Query {
        input: PathBuf,
        u: String,
        v: String,
        #[arg(long, value_enum, default_value_t = Cycles::Remove)]
        cycles: Cycles,
        #[arg(long, value_parser = parse_decompose)]
        decompose: Option<Decompose>,
    },
    /// Print drawing statistics.
    Stats {
        input: PathBuf,
        #[command(flatten)]
        opts: Opts,
    },
}

#[derive(Args)]
struct Opts {
    #[arg(long, value_enum, default_value_t = Mode::Pch)]
    mode: Mode,
    #[arg(long, value_enum, default_value_t = Cycles::Remove)]
    cycles: Cycles,
    /// min-path, min-channel, or file:<path>.
    #[arg(long, value_parser = parse_decompose)]
    decompose: Option<Decompose>,
    #[arg(long, value_enum, default_value_t = Order::Input)]
    order: Order,
    #[arg(long, value_enum, default_value_t = Overlap::Merge)]
    overlap: Overlap,
    /// Largest channel count for --order best.
    #[arg(long, default_value_t = DEFAULT_BEST_ORDER_CAP)]
    best_order_cap: usize,
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Pch,
    Cch,
}

#[derive(Clone, Copy, ValueEnum)]
enum Cycles {
    Remove,
    Condense,
    Fail,
}

#[derive(Clone, Copy, ValueEnum)]
enum Order {
    Input,
    Best,
    Greedy,
}

#[derive(Clone, Copy, ValueEnum)]
enum Overlap {
    Merge,
    Shift,
    Prune,
    AllBend,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Svg,
    Json,
}

fn parse_decompose(s: &str) -> Result<Decompose, String> {
    match s {
        "min-path" => Ok(Decompose::MinPath),
        "min-channel" => Ok(Decompose::MinChannel),
        _ => match s.strip_prefix("file:") {
            Some(p) if !p.is_empty() => Ok(Decompose::File(PathBuf::from(p))),
            _ => Err("expected min-path, min-channel or file:<path>".into()),
        },
    }
}

impl From<Cycles> for CycleMode {
    fn from(c: Cycles) -> Self {
        match c {
            Cycles::Remove => CycleMode::Remove,
            Cycles::Condense => CycleMode::Condense,
            Cycles::Fail => CycleMode::Fail,
        }
    }
}

impl Opts {
    fn config(&self) -> Config {
        Config {
            mode: match self.mode {
                Mode::Pch => DrawMode::Pch,
                Mode::Cch => DrawMode::Cch,
            },
            cycles: self.cycles.into(),
            decompose: self.decompose.clone(),
            order: match self.order {
                Order::Input => OrderMode::Input,
                Order::Best => OrderMode::Best,
                Order::Greedy => OrderMode::Greedy,
            },
            overlap: match self.overlap {
                Overlap::Merge => OverlapMode::Merge,
                Overlap::Shift => OverlapMode::Shift,
                Overlap::Prune => OverlapMode::Prune,
                Overlap::AllBend => OverlapMode::AllBend,
            },
            best_order_cap: self.best_order_cap,
        }
    }
}

enum Failure {
    Pipeline(PipelineError),
    Io(String),
}

impl From<PipelineError> for Failure {
    fn from(e: PipelineError) -> Self {
        Failure::Pipeline(e)
    }
}

fn read(path: &PathBuf) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))
}

fn run(cli: Cli) -> Result<String, Failure> {
    match cli.command {
        Command::Draw {
            input,
            opts,
            format,
            scale,
            out,
        } => {
            let cfg = opts.config();
            let p = prepare(&read(&input)?, &cfg)?;
            let doc = p.document(&p.draw(cfg.overlap)?);
            let text = match format {
                Format::Svg => render_svg(&doc, scale),
                Format::Json => doc.to_json(),
            };
            match out {
                Some(path) => {
                    std::fs::write(&path, text)
                        .map_err(|e| Failure::Io(format!("{}: {e}", path.display())))?;
                    Ok(String::new())
                }
                None => Ok(text),
            }
        }
        Command::Query {
            input,
            u,
            v,
            cycles,
            decompose,
        } => {
            let cfg = Config {
                mode: DrawMode::Cch,
                cycles: cycles.into(),
                decompose,
                ..Config::default()
            };
            let p = prepare(&read(&input)?, &cfg)?;
            let answer = query_labels(&p, &u, &v)?;
            Ok(format_answer(&answer, p.dag()) + "\n")
        }
        Command::Stats { input, opts } => {
            let cfg = opts.config();
            let p = prepare(&read(&input)?, &cfg)?;
            Ok(p.document(&p.draw(cfg.overlap)?).stats_table())
        }
    }
}

fn main() -> ExitCode {
    // Usage errors exit 1; 2 means a constraint failure.
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    match run(cli) {
        Ok(text) => {
            let mut stdout = std::io::stdout().lock();
            if stdout
                .write_all(text.as_bytes())
                .and_then(|_| stdout.flush())
                .is_err()
            {
                return ExitCode::from(1);
            }
            ExitCode::SUCCESS
        }
        Err(Failure::Pipeline(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(if e.is_constraint() { 2 } else { 1 })
        }
        Err(Failure::Io(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
