//! Integer range lists: `3`, `2..10` (inclusive), `2,4,6`, or combinations.

use std::collections::BTreeMap;

pub fn parse_range(spec: &str) -> Result<Vec<usize>, String> {
    let mut out = Vec::new();
    for part in spec.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        match part.split_once("..") {
            Some((a, b)) => {
                let lo: usize = a.trim().parse().map_err(|_| format!("bad range `{part}`"))?;
                let hi: usize = b
                    .trim()
                    .trim_start_matches('=')
                    .parse()
                    .map_err(|_| format!("bad range `{part}`"))?;
                if lo > hi {
                    return Err(format!("empty range `{part}`"));
                }
                out.extend(lo..=hi);
            }
            None => out.push(part.parse().map_err(|_| format!("bad integer `{part}`"))?),
        }
    }
    if out.is_empty() {
        return Err(format!("empty range `{spec}`"));
    }
    Ok(out)
}

/// `m=2..10;n=3;k=1..3` into named ranges.
pub fn parse_grid(spec: &str) -> Result<BTreeMap<String, Vec<usize>>, String> {
    let mut out = BTreeMap::new();
    for part in spec.split(';').map(str::trim).filter(|p| !p.is_empty()) {
        let (name, range) = part
            .split_once('=')
            .ok_or_else(|| format!("grid entry `{part}` is not name=range"))?;
        out.insert(name.trim().to_string(), parse_range(range)?);
    }
    Ok(out)
}

pub fn parse_csv(spec: &str) -> Result<Vec<usize>, String> {
    spec.split(',')
        .map(|s| s.trim().parse().map_err(|_| format!("bad integer `{s}` in `{spec}`")))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranges() {
        assert_eq!(parse_range("2..4").unwrap(), vec![2, 3, 4]);
        assert_eq!(parse_range("2..=3,7").unwrap(), vec![2, 3, 7]);
        assert!(parse_range("5..2").is_err());
        assert!(parse_range("x").is_err());
        let g = parse_grid("m=2..3; n=4").unwrap();
        assert_eq!(g["m"], vec![2, 3]);
        assert_eq!(g["n"], vec![4]);
        assert!(parse_grid("m2").is_err());
        assert_eq!(parse_csv("6,6,4").unwrap(), vec![6, 6, 4]);
    }
}
