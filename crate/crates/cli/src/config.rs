use std::path::PathBuf;

use clap::builder::TypedValueParser;
use clap::{Args, Parser, Subcommand, ValueEnum};
use phasespin_core::sigma::{from_spherical_deg, sigma};
use phasespin_core::{BellVariant, Multivector};
use serde::Serialize;

#[derive(Debug, Parser)]
#[command(name = "phasespin", version, about = "Spin-1/2 correlation curves, Gram matrices and differential checks")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Bipartite correlation of a Bell state as the second detector sweeps 0..180°.
    Curve(CurveArgs),
    /// Single-spin measurement probabilities as the detector sweeps 0..180°.
    Single(SingleArgs),
    /// Overlap matrices of the four spinor Bell forms.
    Gram(OutputArgs),
    /// Seeded random-detector sweep against the Pauli-matrix reference.
    Difftest(DifftestArgs),
    /// Seeded algebraic identity suites for Cl(3,0) and Cl(2,3).
    AlgebraCheck(AlgebraArgs),
}

#[derive(Debug, Args)]
pub struct OutputArgs {
    /// Pass threshold on the largest deviation.
    #[arg(long, default_value_t = 1e-12)]
    pub tol: f64,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
    /// Output file; standard output when absent.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    /// Fixed direction as `theta,phi` in degrees; defaults to the plane's first axis.
    #[arg(long, value_parser = parse_angles, allow_hyphen_values = true)]
    pub u: Option<[f64; 2]>,
    /// Direction fixing the sweep plane together with `--u`, as `theta,phi` in degrees.
    #[arg(long, value_parser = parse_angles, allow_hyphen_values = true)]
    pub v: Option<[f64; 2]>,
    #[arg(long, value_enum, default_value_t = Plane::Xz)]
    pub plane: Plane,
    /// Grid points over 0..180°, at least 2.
    #[arg(long, default_value_t = 181, value_parser = clap::value_parser!(u64).range(2..))]
    pub samples: u64,
}

#[derive(Debug, Args)]
pub struct CurveArgs {
    /// Bell index μ.
    #[arg(long, default_value_t = 0, value_parser = clap::value_parser!(u8).range(0..=3))]
    pub state: u8,
    #[arg(long, value_parser = parse_variant, default_value = "Y")]
    pub variant: Variant,
    #[command(flatten)]
    pub sweep: SweepArgs,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct SingleArgs {
    #[command(flatten)]
    pub sweep: SweepArgs,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct DifftestArgs {
    #[arg(long, default_value_t = 42)]
    pub seed: u64,
    /// Random detector pairs.
    #[arg(long, default_value_t = 1000, value_parser = clap::value_parser!(u64).range(1..))]
    pub samples: u64,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct AlgebraArgs {
    /// Generator count, 3 or 5; both when absent.
    #[arg(long, value_parser = clap::builder::PossibleValuesParser::new(["3", "5"]).map(|s| s.parse::<u8>().unwrap()))]
    pub dim: Option<u8>,
    #[arg(long, default_value_t = 42)]
    pub seed: u64,
    /// Random cases per suite.
    #[arg(long, default_value_t = 10_000, value_parser = clap::value_parser!(u64).range(1..))]
    pub samples: u64,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Csv,
    Json,
}

/// Sweep plane, named by the two axes it contains.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Plane {
    Xz,
    Yz,
    Xy,
}

impl Plane {
    /// Default fixed axis and the in-plane direction orthogonal to it.
    pub fn axes(self) -> (Multivector, Multivector) {
        match self {
            Plane::Xz => (sigma(3), sigma(1)),
            Plane::Yz => (sigma(3), sigma(2)),
            Plane::Xy => (sigma(1), sigma(2)),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Variant {
    #[serde(rename = "Y")]
    Y,
    #[serde(rename = "Y'")]
    YPrime,
    #[serde(rename = "Y''")]
    YDoublePrime,
}

impl From<Variant> for BellVariant {
    fn from(v: Variant) -> Self {
        match v {
            Variant::Y => BellVariant::Y,
            Variant::YPrime => BellVariant::YPrime,
            Variant::YDoublePrime => BellVariant::YDoublePrime,
        }
    }
}

fn parse_variant(s: &str) -> Result<Variant, String> {
    match s {
        "Y" | "y" => Ok(Variant::Y),
        "Y'" | "y'" | "yp" | "Yp" => Ok(Variant::YPrime),
        "Y''" | "y''" | "ypp" | "Ypp" => Ok(Variant::YDoublePrime),
        _ => Err(format!("unknown variant `{s}`; expected Y, Y' (yp) or Y'' (ypp)")),
    }
}

fn parse_angles(s: &str) -> Result<[f64; 2], String> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    let [t, p] = parts.as_slice() else {
        return Err(format!("expected `theta,phi` in degrees, got `{s}`"));
    };
    let parse = |x: &str| {
        x.parse::<f64>()
            .ok()
            .filter(|v| v.is_finite())
            .ok_or_else(|| format!("`{x}` is not a finite number"))
    };
    Ok([parse(t)?, parse(p)?])
}

/// Fully resolved run parameters; echoed verbatim in JSON output.
#[derive(Debug, Clone, Serialize)]
pub struct RunConfig {
    pub command: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub state: Option<u8>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub variant: Option<Variant>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub u: Option<[f64; 2]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub v: Option<[f64; 2]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub plane: Option<Plane>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub samples: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dim: Option<u8>,
    pub tol: f64,
    pub format: Format,
    #[serde(skip)]
    pub out: Option<PathBuf>,
}

impl RunConfig {
    fn base(command: &'static str, o: OutputArgs) -> Self {
        Self {
            command,
            state: None,
            variant: None,
            u: None,
            v: None,
            plane: None,
            samples: None,
            seed: None,
            dim: None,
            tol: o.tol,
            format: o.format,
            out: o.out,
        }
    }

    fn with_sweep(mut self, s: SweepArgs) -> Self {
        self.u = s.u;
        self.v = s.v;
        self.plane = Some(s.plane);
        self.samples = Some(s.samples);
        self
    }

    /// Angle flags converted to unit vectors, degrees to radians once.
    pub fn directions(&self) -> (Option<Multivector>, Option<Multivector>) {
        let conv = |a: Option<[f64; 2]>| a.map(|[t, p]| from_spherical_deg(t, p));
        (conv(self.u), conv(self.v))
    }
}

impl From<Cli> for RunConfig {
    fn from(cli: Cli) -> Self {
        match cli.command {
            Command::Curve(a) => {
                let mut c = RunConfig::base("curve", a.output).with_sweep(a.sweep);
                c.state = Some(a.state);
                c.variant = Some(a.variant);
                c
            }
            Command::Single(a) => RunConfig::base("single", a.output).with_sweep(a.sweep),
            Command::Gram(o) => RunConfig::base("gram", o),
            Command::Difftest(a) => {
                let mut c = RunConfig::base("difftest", a.output);
                c.seed = Some(a.seed);
                c.samples = Some(a.samples);
                c
            }
            Command::AlgebraCheck(a) => {
                let mut c = RunConfig::base("algebra-check", a.output);
                c.dim = a.dim;
                c.seed = Some(a.seed);
                c.samples = Some(a.samples);
                c
            }
        }
    }
}
