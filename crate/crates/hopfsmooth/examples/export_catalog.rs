//! Write the built-in catalog (six groups over Q and the natural GL2
//! action) as JSON files, demonstrating the on-disk formats.
//!
//! Run with: cargo run --example export_catalog

use hopfsmooth::files::export_catalog;

fn main() -> hopfsmooth::Result<()> {
    let dir = std::path::Path::new("catalog");
    let files = export_catalog(dir)?;
    println!("wrote {} files into {}/:", files.len(), dir.display());
    for f in files {
        println!("  {}", f);
    }
    Ok(())
}
