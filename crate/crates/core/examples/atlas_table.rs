//! Builds the table up to a genus bound, prints it as markdown and compares
//! it with the reference table.

use wsatlas::atlas::{build_atlas, diff_reference, export, AtlasOptions, ExportFormat};

fn main() -> wsatlas::Result<()> {
    let g_max = std::env::args().nth(1).map_or(Ok(5), |s| s.parse()).expect("genus bound");
    let opts = AtlasOptions {
        include_t2: true,
        ..Default::default()
    };
    let atlas = build_atlas(g_max, &opts, None)?;
    print!("{}", export(&atlas.rows, ExportFormat::Markdown)?);
    print!("{}", diff_reference(&atlas.rows).text());
    Ok(())
}
