use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use tilecode::{
    decode, digits, encode_sequence, encode_with_drawings, make_tables, parse_code, parse_sequence,
    print_code, print_sequence, to_mesh, to_svg, ConeFile, EmbeddedTile, Error, FlatTile, Letter,
    Relation, SlantTile, Slot, TileStep, Tracer,
};

const DEFAULT_STEPS: usize = 1_000_000;

#[derive(Parser)]
#[command(
    name = "tilecode",
    version,
    about = "Encode and decode lattice tile trajectories as U/D codes"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Encode the trajectory of a cone file's drawings.
    Encode {
        cones: PathBuf,
        #[arg(long)]
        start: String,
        #[command(flatten)]
        conv: Conventions,
        /// Tiles to trace when the file holds one drawing without a range.
        #[arg(long)]
        steps: Option<usize>,
        #[command(flatten)]
        out: Output,
    },
    /// Encode a sequence of flat tiles without a cone.
    EncodeSeq {
        sequence: PathBuf,
        #[command(flatten)]
        conv: Conventions,
        /// Relation of the last letter to its predecessor.
        #[arg(long, value_enum, default_value_t = Policy::Same)]
        final_policy: Policy,
        #[command(flatten)]
        out: Output,
    },
    /// Decode a code file into tiles, one per line.
    Decode {
        code: PathBuf,
        /// Initial lift.
        #[arg(long)]
        start: String,
        #[arg(long, value_enum, default_value_t = SlotArg::U)]
        exit: SlotArg,
        /// Print lifts instead of canonical flat tiles.
        #[arg(long)]
        lifts: bool,
        #[command(flatten)]
        out: Output,
    },
    /// Follow one drawing's flow and print its lifts.
    Trace {
        cones: PathBuf,
        #[arg(long)]
        start: String,
        #[arg(long, value_enum, default_value_t = SlotArg::U)]
        exit: SlotArg,
        /// 1-based drawing index in the cone file.
        #[arg(long, default_value_t = 1)]
        drawing: usize,
        #[arg(long)]
        steps: Option<usize>,
        #[command(flatten)]
        out: Output,
    },
    /// Print encoding and decoding tables.
    Tables {
        #[arg(long)]
        dim: usize,
        #[command(flatten)]
        out: Output,
    },
    /// Tetrahedral mesh of a lift sequence (N = 4).
    Mesh {
        sequence: PathBuf,
        #[command(flatten)]
        out: Output,
    },
    /// Planar drawing of a lift sequence (N = 3).
    Svg {
        sequence: PathBuf,
        #[command(flatten)]
        out: Output,
    },
    /// Octal digits of a code, three letters each.
    Digits {
        code: PathBuf,
        #[command(flatten)]
        out: Output,
    },
}

#[derive(Args)]
struct Conventions {
    /// Slot the first tile leaves through.
    #[arg(long, value_enum, default_value_t = SlotArg::U)]
    exit: SlotArg,
    /// First letter of the code.
    #[arg(long, value_enum, default_value_t = LetterArg::U)]
    init_letter: LetterArg,
}

#[derive(Args)]
struct Output {
    /// Output file; stdout when absent.
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum SlotArg {
    U,
    D,
}

impl From<SlotArg> for Slot {
    fn from(s: SlotArg) -> Self {
        match s {
            SlotArg::U => Slot::U,
            SlotArg::D => Slot::D,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum LetterArg {
    U,
    D,
}

impl From<LetterArg> for Letter {
    fn from(l: LetterArg) -> Self {
        match l {
            LetterArg::U => Letter::U,
            LetterArg::D => Letter::D,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Policy {
    Same,
    Flip,
}

impl From<Policy> for Relation {
    fn from(p: Policy) -> Self {
        match p {
            Policy::Same => Relation::Same,
            Policy::Flip => Relation::Flip,
        }
    }
}

/// Failures split by exit status: 2 for bad input, 1 for codec errors.
enum Failure {
    Usage(String),
    Codec(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse(_)
            | Error::EmptyDrawings
            | Error::EmptyCode
            | Error::BadRange { .. }
            | Error::LengthNotMultipleOfThree { .. }
            | Error::InvalidDimension(_)
            | Error::InvalidTile(_)
            | Error::DimensionMismatch { .. }
            | Error::WrongDimension { .. } => Failure::Usage(e.to_string()),
            _ => Failure::Codec(e.to_string()),
        }
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn write(out: &Output, text: &str) -> Result<(), Failure> {
    let res = match &out.output {
        Some(path) => fs::write(path, text),
        None => io::stdout().lock().write_all(text.as_bytes()),
    };
    res.map_err(|e| Failure::Usage(format!("cannot write output: {e}")))
}

fn gradient_comment(step: &TileStep) -> String {
    format!(
        "{}  # {}\n",
        step.lift,
        step.gradient().display(step.lift.dim())
    )
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Encode {
            cones,
            start,
            conv,
            steps,
            out,
        } => {
            let file = ConeFile::parse(&read(&cones)?)?;
            let drawings = file.drawings(Some(steps.unwrap_or(DEFAULT_STEPS)))?;
            if drawings.is_empty() {
                return Err(Error::EmptyDrawings.into());
            }
            let start = SlantTile::parse_in(&start, file.dim)?.flat();
            let patched =
                encode_with_drawings(&drawings, &start, conv.exit.into(), conv.init_letter.into())?;
            write(&out, &print_code(&patched.code))
        }
        Command::EncodeSeq {
            sequence,
            conv,
            final_policy,
            out,
        } => {
            let flats: Vec<FlatTile> = parse_sequence(&read(&sequence)?)?
                .iter()
                .map(SlantTile::flat)
                .collect();
            let seq = encode_sequence(
                &flats,
                conv.init_letter.into(),
                conv.exit.into(),
                final_policy.into(),
            )?;
            write(&out, &print_code(&seq.code))
        }
        Command::Decode {
            code,
            start,
            exit,
            lifts,
            out,
        } => {
            let code = parse_code(&read(&code)?)?;
            let start = SlantTile::parse(&start)?;
            let steps = decode(&code, &start, exit.into())?;
            let tiles: Vec<SlantTile> = steps
                .into_iter()
                .map(|s| if lifts { s.lift } else { s.flat.rep().clone() })
                .collect();
            write(&out, &print_sequence(&tiles))
        }
        Command::Trace {
            cones,
            start,
            exit,
            drawing,
            steps,
            out,
        } => {
            let file = ConeFile::parse(&read(&cones)?)?;
            let entry = drawing
                .checked_sub(1)
                .and_then(|k| file.entries.get(k))
                .ok_or(Error::BadRange {
                    drawing,
                    reason: "no such drawing".into(),
                })?;
            let len = steps
                .or(entry.range.map(|(a, b)| b + 1 - a))
                .unwrap_or(DEFAULT_STEPS);
            let start = SlantTile::parse_in(&start, file.dim)?.flat();
            let mut text = String::new();
            for step in Tracer::new(&entry.cone, &start, exit.into()).take(len) {
                text.push_str(&gradient_comment(&step?));
            }
            write(&out, &text)
        }
        Command::Tables { dim, out } => write(&out, &make_tables(dim)?.to_string()),
        Command::Mesh { sequence, out } => {
            let tiles: Vec<EmbeddedTile> = parse_sequence(&read(&sequence)?)?
                .iter()
                .map(EmbeddedTile::from_lift)
                .collect();
            write(&out, &to_mesh(&tiles)?)
        }
        Command::Svg { sequence, out } => {
            let tiles: Vec<EmbeddedTile> = parse_sequence(&read(&sequence)?)?
                .iter()
                .map(EmbeddedTile::from_lift)
                .collect();
            write(&out, &to_svg(&tiles)?)
        }
        Command::Digits { code, out } => {
            let d = digits(&parse_code(&read(&code)?)?)?;
            let line: Vec<String> = d.iter().map(u8::to_string).collect();
            write(&out, &format!("{}\n", line.join(" ")))
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Codec(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
