//! Bundled golden outputs and their regeneration.

use std::fs;
use std::path::Path;

use galcodes::report::{render_all, Format};
use galcodes::{Error, Result};

pub struct Golden {
    pub file: &'static str,
    /// The published table or statement the output mirrors.
    pub anchor: &'static str,
    /// Subcommand and flags that regenerate the body.
    pub args: &'static [&'static str],
    pub bundled: &'static str,
}

macro_rules! golden {
    ($file:literal, $anchor:literal, [$($arg:literal),* $(,)?]) => {
        Golden {
            file: $file,
            anchor: $anchor,
            args: &[$($arg),*],
            bundled: include_str!(concat!("../goldens/", $file)),
        }
    };
}

pub const PUBLISHED_TABLES: &[Golden] = &[
    golden!(
        "codes-c9xc3-f2.md",
        "minimal codes of F2(C_{p^2} x C_p) at p = 3: dimensions and weights (1,27), (2,18) x4, (6,6) x3",
        ["codes", "--group", "C9xC3", "--q", "2"]
    ),
    golden!(
        "equivalence-c9xc3-f2.md",
        "G-equivalence of the minimal codes of F2(C9 x C3): 4 classes against tau(9) = 3",
        ["equivalence", "--group", "C9xC3", "--q", "2"]
    ),
    golden!(
        "equivalence-c27xc3-f2.md",
        "minimal codes of F2(C_{p^n} x C_p) at p = 3, n = 3: weights 2p^(n-k+1), 2n inequivalent codes",
        ["equivalence", "--group", "C27xC3", "--q", "2"]
    ),
    golden!(
        "dihedral-d3-f5.md",
        "dihedral code table, n = 3 over F5",
        ["dihedral", "--n", "3", "--q", "5"]
    ),
    golden!(
        "dihedral-d4-f3.md",
        "dihedral code table, n = 4 over F3",
        ["dihedral", "--n", "4", "--q", "3"]
    ),
    golden!(
        "dihedral-d4-f5.md",
        "dihedral code table, n = 4 over F5",
        ["dihedral", "--n", "4", "--q", "5"]
    ),
    golden!(
        "dihedral-d9-f5.md",
        "dihedral code table, n = 9 over F5 (odd prime power, q generating U(Z_9))",
        ["dihedral", "--n", "9", "--q", "5", "--budget", "244140625"]
    ),
    golden!(
        "mod8-c8-f3.md",
        "explicit primitive idempotents of F3 C_{2^m}, q = 3 mod 8, m = 3",
        ["codes", "--group", "C8", "--q", "3", "--construction", "mod8"]
    ),
    golden!(
        "mod8-c16-f3.md",
        "explicit primitive idempotents of F3 C_{2^m}, q = 3 mod 8, m = 4",
        ["codes", "--group", "C16", "--q", "3", "--construction", "mod8"]
    ),
    golden!(
        "three-prime-c3xc5xc11-f2.md",
        "the fourteen idempotents of F2(C_p1 x C_p2 x C_p3) for primes 3, 5, 11",
        ["idempotents", "--group", "C3xC5xC11", "--q", "2", "--construction", "three-prime"]
    ),
    golden!(
        "chainring-z4-c7.md",
        "cyclic codes over Z4 of length 7: (t+1)^(m+1) = 27 codes, codeword counts and duals",
        ["chainring", "--ring", "Z4", "--group", "C7"]
    ),
];

pub fn suite(name: &str) -> Result<&'static [Golden]> {
    match name {
        // the second name is kept for existing scripts
        "published-tables" | "paper-tables" => Ok(PUBLISHED_TABLES),
        _ => Err(Error::Parse(format!("unknown suite {name:?}"))),
    }
}

/// Full golden text: anchor header followed by the markdown body.
pub fn render(g: &Golden) -> Result<String> {
    let tables = crate::run_args(g.args)?;
    Ok(format!(
        "<!-- anchor: {} -->\n<!-- regenerate: galcodes {} --format md -->\n\n{}",
        g.anchor,
        g.args.join(" "),
        render_all(&tables, Format::Markdown)
    ))
}

/// Where two texts first differ, as `(line, expected, got)`.
pub fn first_difference(expected: &str, got: &str) -> Option<(usize, String, String)> {
    let mut a = expected.lines();
    let mut b = got.lines();
    for line in 1.. {
        match (a.next(), b.next()) {
            (None, None) => return (expected != got).then(|| (line, String::new(), String::new())),
            (x, y) if x != y => {
                return Some((line, x.unwrap_or("<eof>").into(), y.unwrap_or("<eof>").into()));
            }
            _ => {}
        }
    }
    None
}

/// Checks a suite against bundled copies, or the files in `dir` when given.
/// With `bless`, writes the regenerated files into `dir` instead.
pub fn verify(name: &str, dir: Option<&Path>, bless: bool) -> Result<bool> {
    let mut ok = true;
    for g in suite(name)? {
        let fresh = render(g)?;
        if bless {
            let dir = dir.ok_or_else(|| Error::Parse("--bless needs --goldens DIR".into()))?;
            fs::write(dir.join(g.file), &fresh)
                .map_err(|e| Error::Invariant(format!("writing {}: {e}", g.file)))?;
            println!("[wrote] {}", g.file);
            continue;
        }
        let stored = match dir {
            Some(d) => fs::read_to_string(d.join(g.file))
                .map_err(|e| Error::Invariant(format!("reading {}: {e}", g.file)))?,
            None => g.bundled.to_string(),
        };
        match first_difference(&stored, &fresh) {
            None => println!("[ok] {}", g.file),
            Some((line, want, got)) => {
                ok = false;
                println!("[mismatch] {} line {line}\n  stored: {want}\n  fresh:  {got}", g.file);
            }
        }
    }
    Ok(ok)
}
