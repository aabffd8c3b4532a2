//! Command-line front end. [`run`] does all the work and returns the text and exit code,
//! so the binary is a one-liner and the commands are testable in-process.

use std::fmt::Write as _;

use clap::{Args, Parser, Subcommand};

use crate::catalog::{kappa, BUILTINS};
use crate::grigorchuk::{derive_witness_in, is_trivial, GrigWord};
use crate::growth::{growth_of_system, GrowthError};
use crate::lsystem::{parse_grammar, print_grammar, DerivationWitness, LSystem, Membership, SearchCaps};
use crate::stallings::{is_basis_f2, parse_word_set, FreeWord, PinchOptions, PrimitiveSearch};

pub const EXIT_YES: i32 = 0;
pub const EXIT_NO: i32 = 1;
pub const EXIT_UNKNOWN: i32 = 2;
pub const EXIT_USAGE: i32 = 64;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommandResult {
    pub code: i32,
    pub output: String,
}

impl CommandResult {
    fn new(code: i32, output: impl Into<String>) -> Self {
        CommandResult { code, output: output.into() }
    }

    fn usage(message: impl std::fmt::Display) -> Self {
        CommandResult::new(EXIT_USAGE, format!("error: {message}\n"))
    }
}

#[derive(Parser, Debug)]
#[command(name = "grouplang", about = "L systems with rational control and the group languages they generate")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List the words of a system up to a length.
    Enumerate {
        #[command(flatten)]
        source: Source,
        #[arg(long)]
        max_len: usize,
        #[command(flatten)]
        caps: CapArgs,
    },
    /// Decide membership of a word, printing a derivation on success.
    Member {
        #[command(flatten)]
        source: Source,
        word: String,
        #[command(flatten)]
        caps: CapArgs,
        /// For the Grigorchuk co-word grammar: decide by the word problem and build the
        /// derivation directly instead of searching.
        #[arg(long)]
        grig_oracle: bool,
    },
    /// Grigorchuk group: word problem and co-word derivations.
    Grig {
        #[command(subcommand)]
        command: GrigCommand,
    },
    /// Free groups: primitive sets and bases of F₂.
    Free {
        #[command(subcommand)]
        command: FreeCommand,
    },
    /// Growth series as CSV.
    Growth {
        #[command(flatten)]
        source: Source,
        #[arg(long)]
        max_len: usize,
        #[command(flatten)]
        caps: CapArgs,
    },
    /// Crossing sequence of the segment from the origin to (m, n + ε).
    Kappa {
        #[arg(allow_negative_numbers = true)]
        m: i64,
        #[arg(allow_negative_numbers = true)]
        n: i64,
    },
}

#[derive(Subcommand, Debug)]
enum GrigCommand {
    Wp { word: String },
    Witness { word: String },
}

#[derive(Subcommand, Debug)]
enum FreeCommand {
    /// Whether w1#…#wn extends to a basis of F_k.
    Primitive {
        #[arg(short)]
        k: u32,
        words: String,
        #[arg(long)]
        trace: bool,
    },
    /// Whether (g, h) is a basis of F₂.
    Basis2 { g: String, h: String },
}

#[derive(Args, Debug)]
struct Source {
    /// Grammar file.
    #[arg(long, conflicts_with = "builtin", required_unless_present = "builtin")]
    file: Option<String>,
    /// Built-in system name.
    #[arg(long)]
    builtin: Option<String>,
    /// Print the grammar in file format and stop.
    #[arg(long)]
    dump_grammar: bool,
}

#[derive(Args, Debug)]
struct CapArgs {
    #[arg(long)]
    max_sentential: Option<usize>,
    #[arg(long)]
    max_control: Option<usize>,
    #[arg(long)]
    max_visited: Option<usize>,
}

impl CapArgs {
    fn resolve(&self, env: &dyn Fn(&str) -> Option<String>) -> Result<SearchCaps, String> {
        let d = SearchCaps::default();
        let pick = |flag: Option<usize>, var: &str, default: usize| -> Result<usize, String> {
            match (flag, env(var)) {
                (Some(v), _) => Ok(v),
                (None, Some(s)) => s.trim().parse().map_err(|_| format!("{var}={s} is not a count")),
                (None, None) => Ok(default),
            }
        };
        SearchCaps::new(
            pick(self.max_sentential, "GROUPLANG_MAX_SENTENTIAL", d.max_sentential_length)?,
            pick(self.max_control, "GROUPLANG_MAX_CONTROL", d.max_control_length)?,
            pick(self.max_visited, "GROUPLANG_MAX_VISITED", d.max_visited)?,
        )
        .map_err(|e| e.to_string())
    }
}

pub fn builtin(name: &str) -> Option<LSystem> {
    BUILTINS.iter().find(|(n, _)| *n == name).map(|(_, f)| f())
}

fn load(source: &Source) -> Result<(LSystem, String), CommandResult> {
    match (&source.file, &source.builtin) {
        (_, Some(name)) => builtin(name).map(|s| (s, name.clone())).ok_or_else(|| {
            let names: Vec<&str> = BUILTINS.iter().map(|(n, _)| *n).collect();
            CommandResult::usage(format!("unknown builtin '{name}' (known: {})", names.join(", ")))
        }),
        (Some(path), None) => {
            let text = std::fs::read_to_string(path).map_err(|e| CommandResult::usage(format!("{path}: {e}")))?;
            parse_grammar(&text).map(|s| (s, path.clone())).map_err(|e| CommandResult::usage(format!("{path}: {e}")))
        }
        (None, None) => Err(CommandResult::usage("give --file or --builtin")),
    }
}

/// Runs one invocation; `args[0]` is the program name. `env` supplies default caps.
pub fn run<I, S>(args: I, env: &dyn Fn(&str) -> Option<String>) -> CommandResult
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_YES };
            return CommandResult::new(code, e.to_string());
        }
    };
    match execute(cli.command, env) {
        Ok(r) | Err(r) => r,
    }
}

/// Runs with the process environment.
pub fn run_env<I, S>(args: I) -> CommandResult
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    run(args, &|k| std::env::var(k).ok())
}

fn execute(command: Command, env: &dyn Fn(&str) -> Option<String>) -> Result<CommandResult, CommandResult> {
    let caps_of = |c: &CapArgs| c.resolve(env).map_err(CommandResult::usage);
    match command {
        Command::Enumerate { source, max_len, caps } => {
            let (sys, _) = load(&source)?;
            if source.dump_grammar {
                return Ok(CommandResult::new(EXIT_YES, print_grammar(&sys)));
            }
            let found = sys.enumerate(max_len, caps_of(&caps)?);
            let mut out = String::new();
            for w in &found.words {
                let s = sys.format_word(w);
                writeln!(out, "{}", if s.is_empty() { "~" } else { &s }).unwrap();
            }
            if found.exhaustive {
                writeln!(out, "# {} words, exhaustive", found.words.len()).unwrap();
                Ok(CommandResult::new(EXIT_YES, out))
            } else {
                writeln!(out, "# {} words, NOT exhaustive: a search cap was hit", found.words.len()).unwrap();
                Ok(CommandResult::new(EXIT_UNKNOWN, out))
            }
        }
        Command::Member { source, word, caps, grig_oracle } => {
            let (sys, name) = load(&source)?;
            if source.dump_grammar {
                return Ok(CommandResult::new(EXIT_YES, print_grammar(&sys)));
            }
            let w = sys.parse_terminal_word(&word).map_err(CommandResult::usage)?;
            if grig_oracle {
                if name != "grigorchuk-coword" {
                    return Err(CommandResult::usage("--grig-oracle needs --builtin grigorchuk-coword"));
                }
                let g: GrigWord = sys.format_word(&w).parse().map_err(CommandResult::usage)?;
                if is_trivial(&g) {
                    return Ok(CommandResult::new(EXIT_NO, "NO (trivial in the group)\n"));
                }
                let wit = derive_witness_in(&sys, &g).map_err(CommandResult::usage)?;
                return Ok(yes_with_witness(&sys, &wit));
            }
            match sys.member(&w, caps_of(&caps)?).map_err(CommandResult::usage)? {
                Membership::Yes(wit) => Ok(yes_with_witness(&sys, &wit)),
                Membership::No => Ok(CommandResult::new(EXIT_NO, "NO\n")),
                Membership::Unknown => Ok(CommandResult::new(EXIT_UNKNOWN, "UNKNOWN (search cap hit)\n")),
            }
        }
        Command::Grig { command } => {
            let parse = |s: &str| s.parse::<GrigWord>().map_err(CommandResult::usage);
            match command {
                GrigCommand::Wp { word } => Ok(if is_trivial(&parse(&word)?) {
                    CommandResult::new(EXIT_YES, "TRIVIAL\n")
                } else {
                    CommandResult::new(EXIT_NO, "NONTRIVIAL\n")
                }),
                GrigCommand::Witness { word } => {
                    let g = parse(&word)?;
                    let sys = crate::catalog::grigorchuk_coword_system();
                    match derive_witness_in(&sys, &g) {
                        Ok(wit) if wit.verify(&sys) => Ok(yes_with_witness(&sys, &wit)),
                        Ok(_) => Ok(CommandResult::new(EXIT_UNKNOWN, "witness construction failed verification\n")),
                        Err(e) => Ok(CommandResult::new(EXIT_NO, format!("NO: {e}\n"))),
                    }
                }
            }
        }
        Command::Free { command } => match command {
            FreeCommand::Primitive { k, words, trace } => {
                let parsed = parse_word_set(&words).map_err(CommandResult::usage)?;
                let mut out = String::new();
                let mut reduced = Vec::new();
                for w in parsed {
                    let r = w.reduced();
                    if r != w {
                        writeln!(out, "warning: {w} freely reduced to {r}").unwrap();
                    }
                    if r.is_empty() {
                        return Err(CommandResult::usage(format!("{w} is trivial")));
                    }
                    reduced.push(r);
                }
                if reduced.len() > k as usize {
                    writeln!(out, "NO ({} words cannot extend to a basis of F_{k})", reduced.len()).unwrap();
                    return Ok(CommandResult::new(EXIT_NO, out));
                }
                let mut search = PrimitiveSearch::new(PinchOptions::default(), true);
                let yes = search.run(&reduced, k).map_err(CommandResult::usage)?;
                if !yes {
                    out.push_str("NO\n");
                    return Ok(CommandResult::new(EXIT_NO, out));
                }
                out.push_str("YES\n");
                if trace {
                    let t = search.last_trace().expect("yes answers keep a trace");
                    writeln!(out, "folded: {}", t.start).unwrap();
                    for (mv, g) in &t.steps {
                        writeln!(out, "pinch {mv:?} -> {g}").unwrap();
                    }
                }
                Ok(CommandResult::new(EXIT_YES, out))
            }
            FreeCommand::Basis2 { g, h } => {
                let g: FreeWord = g.parse().map_err(CommandResult::usage)?;
                let h: FreeWord = h.parse().map_err(CommandResult::usage)?;
                if g.max_generator() > 2 || h.max_generator() > 2 {
                    return Err(CommandResult::usage("basis2 works in F₂ (letters a, b)"));
                }
                Ok(if is_basis_f2(&g, &h) {
                    CommandResult::new(EXIT_YES, "YES\n")
                } else {
                    CommandResult::new(EXIT_NO, "NO\n")
                })
            }
        },
        Command::Growth { source, max_len, caps } => {
            let (sys, name) = load(&source)?;
            if source.dump_grammar {
                return Ok(CommandResult::new(EXIT_YES, print_grammar(&sys)));
            }
            match growth_of_system(&sys, &name, max_len, caps_of(&caps)?) {
                Ok(f) => Ok(CommandResult::new(EXIT_YES, f.to_csv())),
                Err(e @ GrowthError::NotExhaustive { .. }) => Ok(CommandResult::new(EXIT_UNKNOWN, format!("{e}\n"))),
            }
        }
        Command::Kappa { m, n } => {
            let k = kappa(m, n).map_err(CommandResult::usage)?;
            Ok(CommandResult::new(EXIT_YES, format!("{k}\n")))
        }
    }
}

fn yes_with_witness(sys: &LSystem, wit: &DerivationWitness) -> CommandResult {
    let mut out = String::from("YES\n");
    writeln!(out, "tables: {}", wit.table_names().join(" ")).unwrap();
    out.push_str(&wit.serialize(sys));
    CommandResult::new(EXIT_YES, out)
}
