//! Counts numerical semigroups by genus and lists the smallest ones.

use wsatlas::enumerate_by_genus;

fn main() -> wsatlas::Result<()> {
    let g_max = std::env::args().nth(1).map_or(Ok(7), |s| s.parse()).expect("genus bound");
    for (g, list) in enumerate_by_genus(g_max)? {
        let shown: Vec<String> = list.iter().take(4).map(|s| format!("<{s}>")).collect();
        let more = if list.len() > 4 { " ..." } else { "" };
        println!("genus {g}: {:>3}  {}{more}", list.len(), shown.join(" "));
    }
    Ok(())
}
