//! Expression language and command-line front end for `symchrom`.
//!
//! ```
//! let out = symchrom_cli::run::run(["symchrom", "expand", "--basis", "m", "s[2,1]"]);
//! assert_eq!(out.code, 0);
//! assert_eq!(out.stdout, "m[2,1] + 2*m[1,1,1]");
//! ```

pub mod ast;
pub mod eval;
pub mod parse;
pub mod run;
