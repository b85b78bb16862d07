//! Plain-text Cayley table format.
//!
//! Line 1 holds the order n; the next n lines hold the table rows as n
//! space-separated indices (`row g, column h` gives g*h); one optional final
//! line holds n element labels. Blank lines are ignored on input.

use std::path::Path;

use super::{FiniteGroup, GroupError, MAX_TABLE_ORDER};

pub fn load_group(path: impl AsRef<Path>) -> Result<FiniteGroup, GroupError> {
    let text = std::fs::read_to_string(path)?;
    parse_group_text(&text)
}

pub fn save_group(group: &FiniteGroup, path: impl AsRef<Path>) -> Result<(), GroupError> {
    std::fs::write(path, write_table(group))?;
    Ok(())
}

/// Render a group in the file format. Labels are emitted only when every
/// label is free of whitespace, since the format separates them by spaces.
pub fn write_table(group: &FiniteGroup) -> String {
    let n = group.order();
    let mut out = String::new();
    out.push_str(&n.to_string());
    out.push('\n');
    for g in 0..n {
        for h in 0..n {
            if h > 0 {
                out.push(' ');
            }
            out.push_str(&group.mul(g, h).to_string());
        }
        out.push('\n');
    }
    if let Some(labels) = group.labels() {
        if labels.iter().all(|l| !l.chars().any(char::is_whitespace)) {
            out.push_str(&labels.join(" "));
            out.push('\n');
        }
    }
    out
}

pub fn parse_group_text(text: &str) -> Result<FiniteGroup, GroupError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty());

    let (order_line, order_text) = lines.next().ok_or(GroupError::FileFormat {
        line: 1,
        reason: "missing order line".into(),
    })?;
    let order: usize = order_text.parse().map_err(|_| GroupError::FileFormat {
        line: order_line,
        reason: format!("expected the group order, got {order_text:?}"),
    })?;
    if order == 0 {
        return Err(GroupError::FileFormat {
            line: order_line,
            reason: "order must be positive".into(),
        });
    }
    if order > MAX_TABLE_ORDER {
        return Err(GroupError::OrderBound {
            order,
            bound: MAX_TABLE_ORDER,
        });
    }

    let mut table = Vec::with_capacity(order * order);
    let mut last_line = order_line;
    for row in 0..order {
        let (line_no, line) = lines.next().ok_or(GroupError::FileFormat {
            line: last_line + 1,
            reason: format!("missing table row {row} (need {order} rows)"),
        })?;
        last_line = line_no;
        let entries: Vec<&str> = line.split_whitespace().collect();
        if entries.len() != order {
            return Err(GroupError::FileFormat {
                line: line_no,
                reason: format!("row {row} has {} entries, expected {order}", entries.len()),
            });
        }
        for entry in entries {
            let v: usize = entry.parse().map_err(|_| GroupError::FileFormat {
                line: line_no,
                reason: format!("expected an element index, got {entry:?}"),
            })?;
            table.push(v);
        }
    }

    let labels = match lines.next() {
        None => None,
        Some((line_no, line)) => {
            let tokens: Vec<String> = line.split_whitespace().map(str::to_string).collect();
            if tokens.len() != order {
                return Err(GroupError::FileFormat {
                    line: line_no,
                    reason: format!("label line has {} entries, expected {order}", tokens.len()),
                });
            }
            if let Some((extra_line, _)) = lines.next() {
                return Err(GroupError::FileFormat {
                    line: extra_line,
                    reason: "unexpected content after the label line".into(),
                });
            }
            Some(tokens)
        }
    };

    FiniteGroup::from_table(order, table, labels)
}
