use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use hhstego::image_io::{load_rgb, load_secret, save_rgb, save_secret};
use hhstego::{
    ber, embed, extract, majority_filter_3x3, plane_capacity, psnr, BitImage, Channel, EmbedParams, Error,
    SessionKey, DEFAULT_ALPHA, DEFAULT_THRESHOLD,
};

const EXIT_IO: u8 = 1;
const EXIT_PARAM: u8 = 2;

/// Hide up to three binary images in the R, G and B planes of a cover image
/// and recover them with the session key and the secret sizes.
///
/// Exit codes: 0 success, 1 I/O or format error (including odd cover
/// dimensions and shape mismatches), 2 capacity or parameter violation.
#[derive(Debug, Parser)]
#[command(name = "hhstego", version, after_long_help = JSON_HELP)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

const JSON_HELP: &str = "\
With --json every invocation prints exactly one JSON object on stdout.
  embed:    command, output, width, height, alpha, capacity_per_plane,
            planes [{channel, bits, capacity}], psnr_db (number or \"inf\")
  extract:  command, width, height, capacity_per_plane, filtered,
            planes [{channel, width, height, bits, output}]
  capacity: command, width, height, capacity_per_plane, max_square_side
  psnr:     command, psnr_db (number or \"inf\"), mse
  ber:      command, ber, bits
  failure:  error, exit_code";

impl Cli {
    pub fn json(&self) -> bool {
        match &self.command {
            Command::Embed(a) => a.json,
            Command::Extract(a) => a.json,
            Command::Capacity(a) => a.json,
            Command::Psnr(a) | Command::Ber(a) => a.json,
        }
    }
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Hide secret images in a cover image.
    Embed(EmbedArgs),
    /// Recover secret images from a stego image.
    Extract(ExtractArgs),
    /// Report how many secret bits each plane of a cover can hold.
    Capacity(CapacityArgs),
    /// PSNR in dB between two RGB images.
    Psnr(PairArgs),
    /// Bit error rate between two binary images.
    Ber(PairArgs),
}

#[derive(Debug, Args)]
#[group(id = "key_source", required = true, multiple = false, args = ["key", "key_file"])]
struct KeyArgs {
    /// Session key as UTF-8 text.
    #[arg(long)]
    key: Option<String>,
    /// Read the session key as raw bytes from a file.
    #[arg(long)]
    key_file: Option<PathBuf>,
}

impl KeyArgs {
    fn load(&self) -> Result<SessionKey, Error> {
        match (&self.key, &self.key_file) {
            (Some(k), _) => Ok(SessionKey::from(k.as_str())),
            (None, Some(path)) => read_bytes(path).map(SessionKey::from),
            (None, None) => Err(Error::InvalidParameter(
                "a --key or --key-file is required".into(),
            )),
        }
    }
}

#[derive(Debug, Args)]
struct EmbedArgs {
    /// Cover image (PNG or BMP, even width and height).
    #[arg(long)]
    cover: PathBuf,
    /// Secret image for the red plane.
    #[arg(long)]
    secret_r: Option<PathBuf>,
    /// Secret image for the green plane.
    #[arg(long)]
    secret_g: Option<PathBuf>,
    /// Secret image for the blue plane.
    #[arg(long)]
    secret_b: Option<PathBuf>,
    #[command(flatten)]
    key: KeyArgs,
    /// Embedding strength in DCT coefficient units.
    #[arg(long, default_value_t = DEFAULT_ALPHA)]
    alpha: f64,
    /// Gray level at or above which a secret pixel is a 1.
    #[arg(long, default_value_t = DEFAULT_THRESHOLD)]
    threshold: u8,
    /// Output stego image (.png or .bmp).
    #[arg(long)]
    out: PathBuf,
    #[arg(long)]
    json: bool,
}

#[derive(Debug, Args)]
struct ExtractArgs {
    /// Stego image.
    #[arg(long)]
    stego: PathBuf,
    #[command(flatten)]
    key: KeyArgs,
    /// Red-plane secret size as WxH; omit to skip the plane.
    #[arg(long)]
    size_r: Option<SecretSize>,
    /// Green-plane secret size as WxH.
    #[arg(long)]
    size_g: Option<SecretSize>,
    /// Blue-plane secret size as WxH.
    #[arg(long)]
    size_b: Option<SecretSize>,
    /// Outputs are written to <PREFIX>_r.png, <PREFIX>_g.png, <PREFIX>_b.png.
    #[arg(long)]
    out_prefix: String,
    /// Clean up each secret with a 3x3 majority filter before saving.
    #[arg(long)]
    filter: bool,
    #[arg(long)]
    json: bool,
}

#[derive(Debug, Args)]
struct CapacityArgs {
    /// Cover image.
    cover: PathBuf,
    #[arg(long)]
    json: bool,
}

#[derive(Debug, Args)]
struct PairArgs {
    a: PathBuf,
    b: PathBuf,
    #[arg(long)]
    json: bool,
}

/// Secret dimensions given as `WxH`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SecretSize {
    pub width: usize,
    pub height: usize,
}

impl FromStr for SecretSize {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (w, h) = s
            .split_once(['x', 'X'])
            .ok_or_else(|| format!("expected WxH, got {s:?}"))?;
        let parse = |v: &str| match v.trim().parse::<usize>() {
            Ok(n) if n > 0 => Ok(n),
            _ => Err(format!("{v:?} is not a positive integer in {s:?}")),
        };
        Ok(Self {
            width: parse(w)?,
            height: parse(h)?,
        })
    }
}

pub enum Outcome {
    Ok { text: String, json: Value },
    Failed { code: u8, message: String },
}

impl Outcome {
    pub fn exit_code(&self) -> u8 {
        match self {
            Outcome::Ok { .. } => 0,
            Outcome::Failed { code, .. } => *code,
        }
    }
}

impl From<Error> for Outcome {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::CapacityExceeded { .. } | Error::InvalidParameter(_) => EXIT_PARAM,
            _ => EXIT_IO,
        };
        Outcome::Failed {
            code,
            message: e.to_string(),
        }
    }
}

pub fn run(cli: Cli) -> Outcome {
    let result = match cli.command {
        Command::Embed(a) => cmd_embed(a),
        Command::Extract(a) => cmd_extract(a),
        Command::Capacity(a) => cmd_capacity(a),
        Command::Psnr(a) => cmd_psnr(a),
        Command::Ber(a) => cmd_ber(a),
    };
    result.unwrap_or_else(Outcome::from)
}

fn read_bytes(path: &Path) -> Result<Vec<u8>, Error> {
    fs::read(path).map_err(|e| match e.kind() {
        std::io::ErrorKind::NotFound => Error::FileNotFound(path.to_path_buf()),
        _ => Error::Io(e),
    })
}

fn psnr_json(db: f64) -> Value {
    if db.is_infinite() {
        json!("inf")
    } else {
        json!(db)
    }
}

fn psnr_text(db: f64) -> String {
    if db.is_infinite() {
        "inf".to_string()
    } else {
        format!("{db:.4}")
    }
}

fn cmd_embed(args: EmbedArgs) -> Result<Outcome, Error> {
    let key = args.key.load()?;
    let params = EmbedParams::new(key).with_alpha(args.alpha)?;
    let cover = load_rgb(&args.cover)?;
    let load = |p: &Option<PathBuf>| match p {
        Some(path) => load_secret(path, args.threshold),
        None => Ok(BitImage::empty()),
    };
    let secrets = [
        load(&args.secret_r)?,
        load(&args.secret_g)?,
        load(&args.secret_b)?,
    ];

    let stego = embed(&cover, [&secrets[0], &secrets[1], &secrets[2]], &params)?;
    save_rgb(&stego, &args.out)?;
    let quality = psnr(&cover, &stego)?;
    let cap = plane_capacity(cover.rows(), cover.cols());

    let mut text = format!(
        "wrote {} ({}x{})\n",
        args.out.display(),
        cover.cols(),
        cover.rows()
    );
    let mut planes = Vec::new();
    for (channel, secret) in Channel::ALL.iter().zip(&secrets) {
        let _ = writeln!(
            text,
            "plane {}: {} bits / capacity {}",
            channel.short_name(),
            secret.len(),
            cap
        );
        planes.push(json!({ "channel": channel.short_name(), "bits": secret.len(), "capacity": cap }));
    }
    let _ = writeln!(text, "psnr: {} dB", psnr_text(quality.psnr_db));

    Ok(Outcome::Ok {
        text,
        json: json!({
            "command": "embed",
            "output": args.out.display().to_string(),
            "width": cover.cols(),
            "height": cover.rows(),
            "alpha": params.alpha(),
            "capacity_per_plane": cap,
            "planes": planes,
            "psnr_db": psnr_json(quality.psnr_db),
        }),
    })
}

fn cmd_extract(args: ExtractArgs) -> Result<Outcome, Error> {
    let key = args.key.load()?;
    let stego = load_rgb(&args.stego)?;
    let requested = [args.size_r, args.size_g, args.size_b];
    let sizes = requested.map(|s| s.map_or((0, 0), |s| (s.height, s.width)));
    let recovered = extract(&stego, &key, sizes)?;

    let mut text = String::new();
    let mut planes = Vec::new();
    for ((channel, size), bits) in Channel::ALL.iter().zip(requested).zip(recovered) {
        let Some(size) = size else { continue };
        let bits = if args.filter {
            majority_filter_3x3(&bits)
        } else {
            bits
        };
        let path = format!("{}_{}.png", args.out_prefix, channel.short_name());
        save_secret(&bits, &path)?;
        let _ = writeln!(
            text,
            "plane {}: {}x{} -> {}",
            channel.short_name(),
            size.width,
            size.height,
            path
        );
        planes.push(json!({
            "channel": channel.short_name(),
            "width": size.width,
            "height": size.height,
            "bits": bits.len(),
            "output": path,
        }));
    }
    if planes.is_empty() {
        text.push_str("no sizes given; nothing extracted\n");
    }

    Ok(Outcome::Ok {
        text,
        json: json!({
            "command": "extract",
            "width": stego.cols(),
            "height": stego.rows(),
            "capacity_per_plane": plane_capacity(stego.rows(), stego.cols()),
            "filtered": args.filter,
            "planes": planes,
        }),
    })
}

fn cmd_capacity(args: CapacityArgs) -> Result<Outcome, Error> {
    let cover = load_rgb(&args.cover)?;
    cover.r().ensure_even()?;
    let cap = plane_capacity(cover.rows(), cover.cols());
    let side = (cap as u64).isqrt();
    Ok(Outcome::Ok {
        text: format!(
            "{}x{} cover\ncapacity per plane: {cap} bits\nlargest square secret: {side}x{side}\n",
            cover.cols(),
            cover.rows()
        ),
        json: json!({
            "command": "capacity",
            "width": cover.cols(),
            "height": cover.rows(),
            "capacity_per_plane": cap,
            "max_square_side": side,
        }),
    })
}

fn cmd_psnr(args: PairArgs) -> Result<Outcome, Error> {
    let report = psnr(&load_rgb(&args.a)?, &load_rgb(&args.b)?)?;
    Ok(Outcome::Ok {
        text: format!("{}\n", psnr_text(report.psnr_db)),
        json: json!({ "command": "psnr", "psnr_db": psnr_json(report.psnr_db), "mse": report.mse }),
    })
}

fn cmd_ber(args: PairArgs) -> Result<Outcome, Error> {
    let a = load_secret(&args.a, DEFAULT_THRESHOLD)?;
    let b = load_secret(&args.b, DEFAULT_THRESHOLD)?;
    let rate = ber(&a, &b)?;
    Ok(Outcome::Ok {
        text: format!("{rate:?}\n"),
        json: json!({ "command": "ber", "ber": rate, "bits": a.len() }),
    })
}
