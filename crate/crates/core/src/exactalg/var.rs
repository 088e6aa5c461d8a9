use core::cmp::Ordering;
use core::fmt;

/// A polynomial indeterminate: a lowercase letter with an optional index
/// (`p`, `x1`, `v12`). Index `0` means "no index".
///
/// Variables are totally ordered by family (`x, y, z, v, p, q, k`, then the
/// remaining letters alphabetically) and then by index. This order drives
/// the graded-lex term order and therefore every serialization.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Var {
    letter: u8,
    index: u16,
}

const FAMILY_ORDER: &[u8] = b"xyzvpqk";

fn family_rank(letter: u8) -> u16 {
    match FAMILY_ORDER.iter().position(|&c| c == letter) {
        Some(i) => i as u16,
        None => FAMILY_ORDER.len() as u16 + letter as u16,
    }
}

impl Var {
    /// Panics unless `letter` is an ASCII lowercase letter.
    pub const fn new(letter: char, index: u16) -> Self {
        assert!(letter.is_ascii_lowercase());
        Var { letter: letter as u8, index }
    }

    pub const fn plain(letter: char) -> Self {
        Var::new(letter, 0)
    }

    pub fn letter(&self) -> char {
        self.letter as char
    }

    pub fn index(&self) -> u16 {
        self.index
    }

    /// Parses names such as `p`, `x1`, `y12`.
    pub fn parse(name: &str) -> Option<Var> {
        let bytes = name.as_bytes();
        let (&first, rest) = bytes.split_first()?;
        if !first.is_ascii_lowercase() {
            return None;
        }
        if rest.is_empty() {
            return Some(Var { letter: first, index: 0 });
        }
        if rest[0] == b'0' || !rest.iter().all(u8::is_ascii_digit) {
            return None;
        }
        let digits = core::str::from_utf8(rest).ok()?;
        let index: u16 = digits.parse().ok()?;
        Some(Var { letter: first, index })
    }

    /// `letter1 .. letterN`
    pub fn family(letter: char, n: usize) -> alloc::vec::Vec<Var> {
        (1..=n).map(|i| Var::new(letter, i as u16)).collect()
    }
}

impl Ord for Var {
    fn cmp(&self, other: &Self) -> Ordering {
        family_rank(self.letter)
            .cmp(&family_rank(other.letter))
            .then(self.index.cmp(&other.index))
    }
}

impl PartialOrd for Var {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.index == 0 {
            write!(f, "{}", self.letter as char)
        } else {
            write!(f, "{}{}", self.letter as char, self.index)
        }
    }
}

impl fmt::Debug for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    #[test]
    fn parse_and_print() {
        for name in ["p", "q", "x1", "v12", "k"] {
            assert_eq!(Var::parse(name).unwrap().to_string(), name);
        }
        assert_eq!(Var::parse("x0"), None);
        assert_eq!(Var::parse("X1"), None);
        assert_eq!(Var::parse(""), None);
        assert_eq!(Var::parse("x1a"), None);
    }

    #[test]
    fn family_order() {
        let x2 = Var::new('x', 2);
        let y1 = Var::new('y', 1);
        let p = Var::plain('p');
        let a = Var::plain('a');
        assert!(Var::new('x', 1) < x2);
        assert!(x2 < y1);
        assert!(y1 < Var::new('z', 1));
        assert!(Var::new('z', 1) < Var::new('v', 1));
        assert!(Var::new('v', 9) < p);
        assert!(p < Var::plain('q'));
        assert!(Var::plain('k') < a);
    }
}
