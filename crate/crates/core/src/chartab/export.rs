use serde_json::{json, Value};

use super::CharacterTable;

/// Class labels such as `1a`, `2a`, `2b`, `4a`: element order plus a
/// letter counting classes of that order.
pub fn class_names(table: &CharacterTable) -> Vec<String> {
    let orders = table.group().classes().element_orders();
    let mut seen: Vec<(u32, usize)> = Vec::new();
    orders
        .iter()
        .map(|&o| {
            let k = match seen.iter_mut().find(|(x, _)| *x == o) {
                Some(e) => {
                    e.1 += 1;
                    e.1
                }
                None => {
                    seen.push((o, 0));
                    0
                }
            };
            format!("{o}{}", letter(k))
        })
        .collect()
}

fn letter(k: usize) -> String {
    let mut s = String::new();
    let mut k = k;
    loop {
        s.insert(0, (b'a' + (k % 26) as u8) as char);
        if k < 26 {
            break;
        }
        k = k / 26 - 1;
    }
    s
}

/// Plain-text dump: class metadata followed by one row per irreducible.
pub fn render_table_text(table: &CharacterTable, name: &str) -> String {
    let cl = table.group().classes();
    let names = class_names(table);
    let mut cells: Vec<Vec<String>> = Vec::new();
    let mut header = vec!["class".to_string()];
    header.extend(names.iter().cloned());
    cells.push(header);
    let mut sizes = vec!["size".to_string()];
    sizes.extend(cl.sizes().iter().map(usize::to_string));
    cells.push(sizes);
    for i in 0..table.len() {
        let mut row = vec![format!("X.{}", i + 1)];
        row.extend(table.values(i).iter().map(|v| v.to_string()));
        cells.push(row);
    }
    let ncols = cells[0].len();
    let widths: Vec<usize> = (0..ncols)
        .map(|c| {
            cells
                .iter()
                .map(|r| r[c].chars().count())
                .max()
                .unwrap_or(0)
        })
        .collect();
    let mut out = format!(
        "{} (order {}, {} classes, prime {})\n",
        name,
        table.group().order(),
        cl.len(),
        table.prime()
    );
    for (k, row) in cells.iter().enumerate() {
        let line: Vec<String> = row
            .iter()
            .zip(&widths)
            .map(|(s, &w)| format!("{s:>w$}"))
            .collect();
        out.push_str(line.join("  ").trim_end());
        out.push('\n');
        if k == 1 {
            out.push('\n');
        }
    }
    out
}

/// Structured record of a table, for JSON output.
pub fn table_record(table: &CharacterTable, name: &str) -> Value {
    let g = table.group();
    let cl = g.classes();
    let names = class_names(table);
    let classes: Vec<Value> = (0..cl.len())
        .map(|c| {
            json!({
                "name": names[c],
                "order": cl.element_orders()[c],
                "size": cl.sizes()[c],
                "representative": g.parent().element(cl.representatives()[c]).to_string(),
            })
        })
        .collect();
    let characters: Vec<Value> = (0..table.len())
        .map(|i| {
            json!({
                "index": i,
                "degree": table.degrees()[i],
                "values": table.values(i).iter().map(|v| v.to_string()).collect::<Vec<_>>(),
            })
        })
        .collect();
    json!({
        "group": name,
        "order": g.order(),
        "prime": table.prime(),
        "classes": classes,
        "characters": characters,
    })
}
