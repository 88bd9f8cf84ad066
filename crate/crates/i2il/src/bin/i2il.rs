//! Command-line front end: encode/decode PGM images, benchmark the four
//! systems, and generate synthetic AR(1) test planes.

use std::collections::HashMap;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use i2il::ar1::{gen_ar1, Ar1Spec};
use i2il::bench::{run_bench, to_csv};
use i2il::codec::{decode_image, encode_image, SystemId};
use i2il::pgm::{read_pgm, write_pgm};

const USAGE: &str = "\
usage: i2il <command> [options]

commands:
  encode   --system <none|rdpcm|i2i|i2i-rdpcm> --in <X.pgm> --out <X.i2il>
  decode   --in <X.i2il> --out <Y.pgm>
  bench    --inputs <dir|files...> [--systems all|<list>] [--csv <out.csv>]
  gen-ar1  --width <W> --height <H> --rho <R> --sigma <S> --seed <N> --out <X.pgm>
";

fn main() -> ExitCode {
    let args: Vec<String> = std::env::args().skip(1).collect();
    match run(&args) {
        Ok(()) => ExitCode::SUCCESS,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::FAILURE
        }
    }
}

fn run(args: &[String]) -> Result<(), String> {
    let Some(command) = args.first() else {
        print!("{USAGE}");
        return Err("missing command".into());
    };
    match command.as_str() {
        "encode" => cmd_encode(&args[1..]),
        "decode" => cmd_decode(&args[1..]),
        "bench" => cmd_bench(&args[1..]),
        "gen-ar1" => cmd_gen_ar1(&args[1..]),
        "-h" | "--help" | "help" => {
            print!("{USAGE}");
            Ok(())
        }
        other => Err(format!("unknown command '{other}' (try --help)")),
    }
}

/// Parse `--flag value...` pairs. Every flag takes at least one value;
/// repeated values accumulate (used by `--inputs`).
fn parse_flags(args: &[String], allowed: &[&str]) -> Result<HashMap<String, Vec<String>>, String> {
    let mut flags: HashMap<String, Vec<String>> = HashMap::new();
    let mut current: Option<String> = None;
    for arg in args {
        if let Some(name) = arg.strip_prefix("--") {
            if !allowed.contains(&name) {
                return Err(format!("unknown option '--{name}'"));
            }
            flags.entry(name.to_string()).or_default();
            current = Some(name.to_string());
        } else {
            match &current {
                Some(name) => flags.get_mut(name).expect("entry exists").push(arg.clone()),
                None => return Err(format!("unexpected argument '{arg}'")),
            }
        }
    }
    for (name, values) in &flags {
        if values.is_empty() {
            return Err(format!("option '--{name}' needs a value"));
        }
    }
    Ok(flags)
}

fn single<'a>(flags: &'a HashMap<String, Vec<String>>, name: &str) -> Result<&'a str, String> {
    match flags.get(name).map(Vec::as_slice) {
        Some([v]) => Ok(v),
        Some(_) => Err(format!("option '--{name}' given more than once")),
        None => Err(format!("missing required option '--{name}'")),
    }
}

fn parse_num<T: std::str::FromStr>(value: &str, what: &str) -> Result<T, String> {
    value.parse().map_err(|_| format!("invalid {what} '{value}'"))
}

fn cmd_encode(args: &[String]) -> Result<(), String> {
    let flags = parse_flags(args, &["system", "in", "out"])?;
    let system = SystemId::from_name(single(&flags, "system")?)
        .ok_or_else(|| "system must be one of none, rdpcm, i2i, i2i-rdpcm".to_string())?;
    let input = single(&flags, "in")?;
    let output = single(&flags, "out")?;

    let plane = read_pgm(input).map_err(|e| format!("{input}: {e}"))?;
    let bytes = encode_image(&plane, system);
    std::fs::write(output, &bytes).map_err(|e| format!("{output}: {e}"))?;
    println!(
        "{} -> {} ({} bytes, {:.4} bpp, system {})",
        input,
        output,
        bytes.len(),
        bytes.len() as f64 * 8.0 / (plane.width() * plane.height()) as f64,
        system.name()
    );
    Ok(())
}

fn cmd_decode(args: &[String]) -> Result<(), String> {
    let flags = parse_flags(args, &["in", "out"])?;
    let input = single(&flags, "in")?;
    let output = single(&flags, "out")?;

    let bytes = std::fs::read(input).map_err(|e| format!("{input}: {e}"))?;
    let plane = decode_image(&bytes).map_err(|e| format!("{input}: {e}"))?;
    write_pgm(&plane, output).map_err(|e| format!("{output}: {e}"))?;
    println!("{} -> {} ({}x{})", input, output, plane.width(), plane.height());
    Ok(())
}

fn collect_inputs(paths: &[String]) -> Result<Vec<PathBuf>, String> {
    let mut files = Vec::new();
    for p in paths {
        let path = Path::new(p);
        if path.is_dir() {
            let mut entries: Vec<PathBuf> = std::fs::read_dir(path)
                .map_err(|e| format!("{p}: {e}"))?
                .filter_map(|e| e.ok().map(|e| e.path()))
                .filter(|p| p.extension().is_some_and(|ext| ext == "pgm"))
                .collect();
            entries.sort();
            files.extend(entries);
        } else {
            files.push(path.to_path_buf());
        }
    }
    if files.is_empty() {
        return Err("no input images found".into());
    }
    Ok(files)
}

fn parse_systems(value: Option<&str>) -> Result<Vec<SystemId>, String> {
    match value {
        None | Some("all") => Ok(SystemId::ALL.to_vec()),
        Some(list) => list
            .split(',')
            .map(|name| {
                SystemId::from_name(name.trim())
                    .ok_or_else(|| format!("unknown system '{name}'"))
            })
            .collect(),
    }
}

fn cmd_bench(args: &[String]) -> Result<(), String> {
    let flags = parse_flags(args, &["inputs", "systems", "csv"])?;
    let paths = flags
        .get("inputs")
        .ok_or_else(|| "missing required option '--inputs'".to_string())?;
    let systems = parse_systems(flags.get("systems").map(|v| v[0].as_str()))?;
    let files = collect_inputs(paths)?;

    let mut inputs = Vec::new();
    for file in &files {
        let plane = read_pgm(file).map_err(|e| format!("{}: {e}", file.display()))?;
        let name = file
            .file_stem()
            .map(|s| s.to_string_lossy().into_owned())
            .unwrap_or_else(|| file.display().to_string());
        inputs.push((name, plane));
    }

    let records = run_bench(&inputs, &systems).map_err(|e| e.to_string())?;
    let csv = to_csv(&records);
    match flags.get("csv") {
        Some(path) => {
            std::fs::write(&path[0], &csv).map_err(|e| format!("{}: {e}", path[0]))?;
            println!("wrote {} records to {}", records.len(), path[0]);
        }
        None => print!("{csv}"),
    }
    Ok(())
}

fn cmd_gen_ar1(args: &[String]) -> Result<(), String> {
    let flags = parse_flags(args, &["width", "height", "rho", "sigma", "seed", "out"])?;
    let spec = Ar1Spec {
        width: parse_num(single(&flags, "width")?, "width")?,
        height: parse_num(single(&flags, "height")?, "height")?,
        rho: parse_num(single(&flags, "rho")?, "rho")?,
        sigma: parse_num(single(&flags, "sigma")?, "sigma")?,
        seed: parse_num(single(&flags, "seed")?, "seed")?,
    };
    if spec.width == 0 || spec.height == 0 {
        return Err("width and height must be >= 1".into());
    }
    let output = single(&flags, "out")?;
    let plane = gen_ar1(&spec).map_err(|e| e.to_string())?;
    write_pgm(&plane, output).map_err(|e| format!("{output}: {e}"))?;
    println!("wrote {}x{} ar1 plane to {}", spec.width, spec.height, output);
    Ok(())
}
