//! Config files: `key = value` lines under `[subcommand]` headers. Keys
//! are the long flag names. Each section is turned into flags placed ahead
//! of the real command line, so explicit flags override the file.

use std::ffi::OsString;
use std::path::Path;

use clap::Command;
use ini::Ini;

use crate::InvalidConfig;

/// Rewrites `argv` with the section for its subcommand spliced in after the
/// subcommand name.
pub fn splice(cmd: &Command, argv: Vec<OsString>, path: &Path) -> Result<Vec<OsString>, InvalidConfig> {
    let ini = Ini::load_from_file(path).map_err(|e| InvalidConfig(format!("{}: {e}", path.display())))?;
    if let Some(keys) = ini.section(None::<String>).filter(|p| !p.is_empty()) {
        let first = keys.iter().next().map(|(k, _)| k).unwrap_or_default();
        return Err(InvalidConfig(format!("key {first:?} is outside any [section]")));
    }
    let names: Vec<&str> = cmd.get_subcommands().map(|s| s.get_name()).collect();
    for section in ini.sections().flatten() {
        if !names.contains(&section) {
            return Err(InvalidConfig(format!("unknown section [{section}]; expected one of {names:?}")));
        }
    }
    let Some(at) = argv.iter().position(|a| a.to_str().is_some_and(|a| names.contains(&a))) else {
        return Ok(argv);
    };
    let name = argv[at].to_str().unwrap().to_owned();
    let Some(props) = ini.section(Some(name.as_str())) else {
        return Ok(argv);
    };
    let sub = cmd.find_subcommand(&name).expect("name came from the command");
    let mut extra = Vec::new();
    for (key, value) in props.iter() {
        let arg = sub
            .get_arguments()
            .find(|a| a.get_long() == Some(key))
            .ok_or_else(|| InvalidConfig(format!("[{name}] has no option {key:?}")))?;
        if arg.get_action().takes_values() {
            extra.push(OsString::from(format!("--{key}")));
            extra.push(OsString::from(value));
        } else {
            match value {
                "true" => extra.push(OsString::from(format!("--{key}"))),
                "false" => {}
                other => return Err(InvalidConfig(format!("[{name}] {key} expects true or false, got {other:?}"))),
            }
        }
    }
    let mut out = argv;
    out.splice(at + 1..at + 1, extra);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use clap::{Arg, ArgAction};

    fn cmd() -> Command {
        Command::new("t").subcommand(
            Command::new("solve")
                .arg(Arg::new("seeds").long("seeds"))
                .arg(Arg::new("quiet").long("quiet").action(ArgAction::SetTrue)),
        )
    }

    fn run(text: &str, argv: &[&str]) -> Result<Vec<String>, InvalidConfig> {
        let dir = tempfile::tempdir().unwrap();
        let p = dir.path().join("c.ini");
        std::fs::write(&p, text).unwrap();
        let argv = argv.iter().map(OsString::from).collect();
        splice(&cmd(), argv, &p).map(|v| v.into_iter().map(|s| s.into_string().unwrap()).collect())
    }

    #[test]
    fn section_lands_after_the_subcommand() {
        let got = run("[solve]\nseeds = 0..5\nquiet = true\n", &["t", "solve", "--seeds", "3"]).unwrap();
        assert_eq!(got, ["t", "solve", "--seeds", "0..5", "--quiet", "--seeds", "3"]);
    }

    #[test]
    fn bad_files_are_rejected() {
        assert!(run("seeds = 1\n", &["t", "solve"]).is_err());
        assert!(run("[fly]\n", &["t", "solve"]).is_err());
        assert!(run("[solve]\ncolour = red\n", &["t", "solve"]).is_err());
        assert!(run("[solve]\nquiet = maybe\n", &["t", "solve"]).is_err());
    }
}
