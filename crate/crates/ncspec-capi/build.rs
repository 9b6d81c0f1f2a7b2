//! Generates `include/ncspec.h` from the public FFI surface.
//!
//! Header generation is best-effort: a cbindgen failure prints a warning and
//! leaves any previously generated header in place rather than failing the
//! build, so the library itself always compiles.

use std::env;
use std::path::PathBuf;

fn main() {
    println!("cargo:rerun-if-changed=src/lib.rs");
    println!("cargo:rerun-if-changed=cbindgen.toml");

    let crate_dir = PathBuf::from(env::var("CARGO_MANIFEST_DIR").expect("CARGO_MANIFEST_DIR"));
    let header = crate_dir.join("include").join("ncspec.h");

    let config = match cbindgen::Config::from_file(crate_dir.join("cbindgen.toml")) {
        Ok(config) => config,
        Err(err) => {
            println!("cargo:warning=cbindgen config error: {err}");
            return;
        }
    };

    match cbindgen::Builder::new().with_crate(&crate_dir).with_config(config).generate() {
        Ok(bindings) => {
            if let Err(err) = std::fs::create_dir_all(header.parent().unwrap()) {
                println!("cargo:warning=cannot create include dir: {err}");
                return;
            }
            bindings.write_to_file(&header);
        }
        Err(err) => {
            println!("cargo:warning=cbindgen failed, keeping existing header: {err}");
        }
    }
}
