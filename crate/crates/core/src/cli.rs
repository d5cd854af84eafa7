//! Command-line front end. [`run`] is pure: it reads input files and returns
//! the exit code with the text for standard output and standard error.

use std::path::{Path, PathBuf};
use std::str::FromStr;

use clap::{Parser, Subcommand};
use num_rational::BigRational;

use crate::bredon::{bredon_membership, classical_sigma, openness_check, subsphere_check, BredonError};
use crate::chars::{parse_character, parse_formal, CharError, Character};
use crate::exactlin::{FormalBasis, FormalReal};
use crate::groups::parse::parse_group;
use crate::groups::{GroupError, GroupInstance, SubgroupDescriptor};
use crate::monoidlab::{morphism_set, wmk_transitivity, MonoidError, MonoidSlice};
use crate::thompson::{sigma_f_membership, FCharacter, ThompsonError};
use crate::verdict::{Degree, Verdict};

#[derive(Parser, Debug)]
#[command(
    name = "sigmakit",
    version,
    about = "Classical and Bredon Sigma-invariant membership tests"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Classical membership through the family oracle.
    Sigma {
        #[arg(long)]
        group: PathBuf,
        #[arg(long = "char", conflicts_with = "fchar")]
        chi: Option<PathBuf>,
        /// Character `a*chi1 + b*chi2` of Thompson's group F, as `a,b`.
        #[arg(long, allow_hyphen_values = true)]
        fchar: Option<String>,
        #[arg(long)]
        m: Degree,
    },
    /// Bredon membership certificate.
    Bredon {
        #[arg(long)]
        group: PathBuf,
        #[arg(long = "char")]
        chi: PathBuf,
        #[arg(long)]
        m: Degree,
        /// Vector-norm bound for the finite subgroup search.
        #[arg(long, default_value_t = 4)]
        bound: i64,
    },
    /// Openness of the Bredon invariant in the character sphere.
    Open {
        #[arg(long)]
        group: PathBuf,
        #[arg(long, default_value_t = 4)]
        bound: i64,
    },
    /// Whether the subsphere of characters vanishing on H lies in the Bredon invariant.
    Subsphere {
        #[arg(long)]
        group: PathBuf,
        /// Generators of H, comma separated; H also contains the commutator subgroup.
        #[arg(long = "H")]
        h: String,
        #[arg(long)]
        m: Degree,
        #[arg(long, default_value_t = 4)]
        bound: i64,
    },
    /// Bounded enumeration of the monoid of elements with nonnegative character value.
    Monoidlab {
        #[arg(long)]
        group: PathBuf,
        #[arg(long = "char")]
        chi: PathBuf,
        #[arg(long, default_value = "6")]
        height: String,
        #[arg(long, default_value_t = 4)]
        norm: i64,
        #[arg(long = "K", default_value = "e")]
        k: String,
        #[arg(long = "H", default_value = "e")]
        h: String,
    },
    /// Load and check the input files only.
    Validate {
        #[arg(long)]
        group: PathBuf,
        #[arg(long = "char")]
        chi: Option<PathBuf>,
    },
}

/// Result of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{path}: {msg}")]
    Io { path: String, msg: String },
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Group(GroupError),
    #[error(transparent)]
    Char(CharError),
    #[error(transparent)]
    Bredon(BredonError),
    #[error(transparent)]
    Monoid(MonoidError),
    #[error(transparent)]
    Thompson(ThompsonError),
}

impl From<GroupError> for CliError {
    fn from(e: GroupError) -> Self {
        match e {
            GroupError::Parse { line, msg } => CliError::Parse { line, msg },
            other => CliError::Group(other),
        }
    }
}

impl From<CharError> for CliError {
    fn from(e: CharError) -> Self {
        match e {
            CharError::Parse { line, msg } => CliError::Parse { line, msg },
            other => CliError::Char(other),
        }
    }
}

impl From<BredonError> for CliError {
    fn from(e: BredonError) -> Self {
        match e {
            BredonError::Group(g) => g.into(),
            BredonError::Char(c) => c.into(),
            other => CliError::Bredon(other),
        }
    }
}

impl From<MonoidError> for CliError {
    fn from(e: MonoidError) -> Self {
        match e {
            MonoidError::Group(g) => g.into(),
            MonoidError::Char(c) => c.into(),
            other => CliError::Monoid(other),
        }
    }
}

impl From<ThompsonError> for CliError {
    fn from(e: ThompsonError) -> Self {
        CliError::Thompson(e)
    }
}

impl CliError {
    /// Machine-readable code and process exit status.
    pub fn code(&self) -> (&'static str, i32) {
        match self {
            CliError::Io { .. } => ("IO", 2),
            CliError::Parse { .. } => ("PARSE", 2),
            CliError::Usage(_) => ("USAGE", 2),
            CliError::Group(GroupError::UnsupportedFamily(_))
            | CliError::Bredon(BredonError::UnsupportedFamily(_))
            | CliError::Monoid(MonoidError::UnsupportedFamily(_)) => ("UNSUPPORTED", 3),
            CliError::Group(GroupError::UnknownGenerator(_)) | CliError::Char(CharError::UnknownGenerator(_)) => {
                ("UNKNOWN_GENERATOR", 5)
            }
            CliError::Group(GroupError::SubgroupNotFinite) | CliError::Monoid(MonoidError::SubgroupNotFinite) => {
                ("SUBGROUP_NOT_FINITE", 5)
            }
            CliError::Group(_) => ("INVALID_GROUP", 5),
            CliError::Char(CharError::ZeroCharacter)
            | CliError::Bredon(BredonError::ZeroCharacter)
            | CliError::Thompson(ThompsonError::ZeroCharacter) => ("ZERO_CHARACTER", 5),
            CliError::Char(CharError::DoesNotKillRelators(_)) => ("NOT_A_CHARACTER", 5),
            CliError::Char(CharError::MissingGenerator(_)) => ("MISSING_GENERATOR", 5),
            CliError::Char(_) => ("INVALID_CHARACTER", 5),
            CliError::Bredon(BredonError::HypothesisViolated(_)) => ("HYPOTHESIS_VIOLATED", 5),
            CliError::Bredon(_) => ("PRECONDITION", 5),
            CliError::Monoid(_) => ("PRECONDITION", 5),
            CliError::Thompson(ThompsonError::PointNotOnSphere) => ("POINT_NOT_ON_SPHERE", 5),
        }
    }
}

fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| CliError::Io {
        path: path.display().to_string(),
        msg: e.to_string(),
    })
}

fn load_group(path: &Path) -> Result<GroupInstance, CliError> {
    Ok(parse_group(&read(path)?)?)
}

fn load_char(g: &GroupInstance, path: &Path) -> Result<(FormalBasis, Character), CliError> {
    Ok(parse_character(g, &read(path)?)?)
}

fn parse_fchar(s: &str) -> Result<FCharacter, CliError> {
    let bad = || CliError::Usage(format!("expected --fchar a,b with rational a and b, got '{s}'"));
    let (a, b) = s.split_once(',').ok_or_else(bad)?;
    let a = BigRational::from_str(a.trim()).map_err(|_| bad())?;
    let b = BigRational::from_str(b.trim()).map_err(|_| bad())?;
    Ok(FCharacter::new(a, b))
}

struct Report {
    lines: Vec<String>,
    verdict: Option<Verdict>,
}

impl Report {
    fn new(g: &GroupInstance) -> Self {
        Report {
            lines: vec![format!("group: {}", g.kind())],
            verdict: None,
        }
    }

    fn push(&mut self, key: &str, value: impl std::fmt::Display) {
        self.lines.push(format!("{key}: {value}"));
    }

    fn extend(&mut self, text: &str) {
        self.lines.extend(text.lines().map(str::to_string));
    }

    fn text(&self) -> String {
        self.lines.join("\n") + "\n"
    }
}

fn execute(cmd: &Command) -> Result<Report, CliError> {
    match cmd {
        Command::Sigma { group, chi, fchar, m } => {
            let g = load_group(group)?;
            let mut r = Report::new(&g);
            r.push("m", m);
            let v = match (chi, fchar) {
                (_, Some(f)) => {
                    if !matches!(g, GroupInstance::Thompson(_)) {
                        return Err(CliError::Group(GroupError::UnsupportedFamily(
                            "--fchar needs a thompsonext group".into(),
                        )));
                    }
                    let p = parse_fchar(f)?;
                    r.push("fchar", &p);
                    r.push("oracle", "thompson-F");
                    Verdict::from_bool(sigma_f_membership(&p, *m)?)
                }
                (Some(c), None) => {
                    let (basis, c) = load_char(&g, c)?;
                    r.push("chi", c.render(&basis));
                    let (oracle, v) = classical_sigma(&g, &c, *m)?;
                    r.push("oracle", oracle);
                    v
                }
                (None, None) => return Err(CliError::Usage("sigma needs --char or --fchar".into())),
            };
            r.push("verdict", v);
            r.verdict = Some(v);
            Ok(r)
        }
        Command::Bredon { group, chi, m, bound } => {
            let g = load_group(group)?;
            let (basis, c) = load_char(&g, chi)?;
            let cert = bredon_membership(&g, &c, *m, *bound)?;
            let mut r = Report::new(&g);
            r.extend(&cert.render(&g, &basis));
            r.verdict = Some(cert.verdict);
            Ok(r)
        }
        Command::Open { group, bound } => {
            let g = load_group(group)?;
            let rep = openness_check(&g, *bound)?;
            let mut r = Report::new(&g);
            r.extend(&rep.render(&g));
            r.verdict = Some(rep.verdict);
            Ok(r)
        }
        Command::Subsphere { group, h, m, bound } => {
            let g = load_group(group)?;
            let hd = g.parse_subgroup(h, "H")?;
            let rep = subsphere_check(&g, &hd, *m, *bound)?;
            let mut r = Report::new(&g);
            r.push("H", g.render_subgroup(&hd));
            r.push("m", m);
            r.extend(&rep.render(&g));
            r.verdict = Some(rep.verdict);
            Ok(r)
        }
        Command::Monoidlab {
            group,
            chi,
            height,
            norm,
            k,
            h,
        } => {
            let g = load_group(group)?;
            let (basis, c) = load_char(&g, chi)?;
            let height: FormalReal =
                parse_formal(&basis, height).map_err(|msg| CliError::Usage(format!("--height: {msg}")))?;
            let slice = MonoidSlice::new(&g, &c, height.clone(), *norm)?;
            let kd: SubgroupDescriptor = g.parse_subgroup(k, "K")?;
            let hd: SubgroupDescriptor = g.parse_subgroup(h, "H")?;
            let d = morphism_set(&slice, &kd, &hd)?;
            let rep = wmk_transitivity(&slice, &d)?;
            let mut r = Report::new(&g);
            r.push("chi", c.render(&basis));
            r.push("height", basis.render(&height));
            r.push("norm", norm);
            r.push("K", g.render_subgroup(&kd));
            r.push("H", g.render_subgroup(&hd));
            r.push("slice", slice.elements().len());
            r.extend(&rep.render(&basis));
            Ok(r)
        }
        Command::Validate { group, chi } => {
            let g = load_group(group)?;
            let mut r = Report::new(&g);
            r.push("generators", g.generator_names().join(" "));
            let ab = g.abelianization();
            r.push("free_rank", ab.free_rank());
            let torsion: Vec<String> = ab.torsion().iter().map(|d| d.to_string()).collect();
            r.push(
                "torsion",
                if torsion.is_empty() {
                    "none".to_string()
                } else {
                    torsion.join(" ")
                },
            );
            if let Some(path) = chi {
                let (basis, c) = load_char(&g, path)?;
                r.push("chi", c.render(&basis));
            }
            r.push("valid", "true");
            Ok(r)
        }
    }
}

/// Runs one command line; `args[0]` is the program name.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome {
                    code: 2,
                    stdout: String::new(),
                    stderr: format!("error: USAGE\n{text}"),
                }
            } else {
                Outcome {
                    code: 0,
                    stdout: text,
                    stderr: String::new(),
                }
            };
        }
    };
    match execute(&cli.command) {
        Ok(r) => Outcome {
            code: if r.verdict == Some(Verdict::Inconclusive) { 4 } else { 0 },
            stdout: r.text(),
            stderr: String::new(),
        },
        Err(e) => {
            let (name, code) = e.code();
            Outcome {
                code,
                stdout: String::new(),
                stderr: format!("error: {name}\n{e}\n"),
            }
        }
    }
}
