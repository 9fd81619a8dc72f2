use crate::pipeline::Outcome;

use super::ParseError;

/// Contents of a result file. Point ids are zero-based in memory and
/// one-based on disk.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ResultFile {
    Cycle(Vec<usize>),
    Fail(String),
}

pub fn format_result(outcome: &Outcome) -> String {
    match outcome {
        Outcome::Success(cycle) => {
            let ids: Vec<String> = cycle.iter().map(|p| (p + 1).to_string()).collect();
            format!("{}\n", ids.join(" "))
        }
        Outcome::Failure(reason) => format!("FAIL {reason}\n"),
    }
}

pub fn parse_result(text: &str) -> Result<ResultFile, ParseError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());
    let Some((line, content)) = lines.next() else {
        return Err(ParseError::Syntax { line: 1, message: "empty result file".into() });
    };
    if let Some((line, _)) = lines.next() {
        return Err(ParseError::Syntax { line, message: "expected a single line".into() });
    }
    if let Some(reason) = content.strip_prefix("FAIL") {
        return Ok(ResultFile::Fail(reason.trim().to_string()));
    }
    content
        .split_whitespace()
        .map(|t| match t.parse::<usize>() {
            Ok(id) if id >= 1 => Ok(id - 1),
            _ => Err(ParseError::Syntax { line, message: format!("bad point id `{t}`") }),
        })
        .collect::<Result<Vec<_>, _>>()
        .map(ResultFile::Cycle)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pipeline::FailureReason;

    #[test]
    fn formats() {
        assert_eq!(format_result(&Outcome::Success(vec![0, 1, 2])), "1 2 3\n");
        assert_eq!(
            format_result(&Outcome::Failure(FailureReason::NoSecondEdge(0, 1))),
            "FAIL NoSecondEdge(0,1)\n"
        );
        assert_eq!(parse_result("1 3 2\n").unwrap(), ResultFile::Cycle(vec![0, 2, 1]));
        assert_eq!(
            parse_result("FAIL DisconnectedOutput\n").unwrap(),
            ResultFile::Fail("DisconnectedOutput".into())
        );
        assert!(parse_result("1 0 2").is_err());
        assert!(parse_result("").is_err());
    }
}
