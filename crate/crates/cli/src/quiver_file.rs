use replicated_core::Quiver;
use serde::{Deserialize, Serialize};

use crate::CliError;

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct QuiverFile {
    vertices: Vec<String>,
    arrows: Vec<ArrowSpec>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ArrowSpec {
    name: String,
    from: String,
    to: String,
}

/// Parses a quiver from its JSON description:
///
/// ```json
/// {"vertices": ["1", "2"], "arrows": [{"name": "a", "from": "2", "to": "1"}]}
/// ```
pub fn parse_quiver(text: &str) -> Result<Quiver, CliError> {
    let file: QuiverFile = serde_json::from_str(text).map_err(|e| CliError::Parse {
        line: e.line(),
        column: e.column(),
        message: strip_position(&e.to_string()),
    })?;
    let empty = file
        .vertices
        .iter()
        .any(String::is_empty)
        .then_some("vertex")
        .or_else(|| file.arrows.iter().any(|a| a.name.is_empty()).then_some("arrow"));
    if let Some(what) = empty {
        let (line, column) = locate(text, "\"\"");
        return Err(CliError::Parse { line, column, message: format!("empty {what} name") });
    }
    let arrows: Vec<(&str, &str, &str)> =
        file.arrows.iter().map(|a| (a.name.as_str(), a.from.as_str(), a.to.as_str())).collect();
    let vertices: Vec<&str> = file.vertices.iter().map(String::as_str).collect();
    Ok(Quiver::new(&vertices, &arrows)?)
}

/// JSON text that [`parse_quiver`] reads back to the same quiver.
pub fn serialize_quiver(q: &Quiver) -> String {
    let v = q.vertices();
    let file = QuiverFile {
        vertices: v.to_vec(),
        arrows: q
            .arrows()
            .iter()
            .map(|a| ArrowSpec { name: a.name.clone(), from: v[a.from].clone(), to: v[a.to].clone() })
            .collect(),
    };
    serde_json::to_string_pretty(&file).expect("quiver serializes") + "\n"
}

fn strip_position(msg: &str) -> String {
    match msg.rfind(" at line ") {
        Some(i) => msg[..i].to_string(),
        None => msg.to_string(),
    }
}

/// 1-based line and column of the first occurrence of `needle`.
fn locate(text: &str, needle: &str) -> (usize, usize) {
    let Some(pos) = text.find(needle) else {
        return (0, 0);
    };
    let before = &text[..pos];
    let line = before.matches('\n').count() + 1;
    let column = before.rfind('\n').map_or(pos, |nl| pos - nl - 1) + 1;
    (line, column)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reads_kronecker() {
        let q = parse_quiver(
            r#"{"vertices":["1","2"],"arrows":[{"name":"a","from":"2","to":"1"},{"name":"b","from":"2","to":"1"}]}"#,
        )
        .unwrap();
        assert_eq!(q, Quiver::kronecker());
    }

    #[test]
    fn reports_positions() {
        let err = parse_quiver("{\n  \"vertices\": [\"1\",\n  ]\n}").unwrap_err();
        match err {
            CliError::Parse { line, .. } => assert_eq!(line, 3),
            other => panic!("{other:?}"),
        }
        let err = parse_quiver("{\"vertices\": [\"1\", \"\"], \"arrows\": []}").unwrap_err();
        assert!(matches!(err, CliError::Parse { line: 1, column: 20, .. }), "{err:?}");
    }
}
