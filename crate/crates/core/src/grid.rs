//! Comma-separated parameter lists such as `10,100,1000`.

use crate::error::{CrrError, Result};

pub fn parse_grid(text: &str) -> Result<Vec<f64>> {
    let text = text.trim();
    if text.is_empty() {
        return Err(CrrError::Grid("empty list".into()));
    }
    text.split(',')
        .map(|item| {
            let item = item.trim();
            let v: f64 = item
                .parse()
                .map_err(|_| CrrError::Grid(format!("not a number: {item:?}")))?;
            if !v.is_finite() {
                return Err(CrrError::Grid(format!("not finite: {item:?}")));
            }
            Ok(v)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_lists() {
        assert_eq!(parse_grid("1, 2.5,1e3").unwrap(), vec![1.0, 2.5, 1000.0]);
        assert_eq!(parse_grid(" -3 ").unwrap(), vec![-3.0]);
    }

    #[test]
    fn rejects_junk() {
        for bad in ["", " ", "1,,2", "1,x", "inf", "1,NaN", "1;2"] {
            assert!(matches!(parse_grid(bad), Err(CrrError::Grid(_))), "{bad}");
        }
    }
}
