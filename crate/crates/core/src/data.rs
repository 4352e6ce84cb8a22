//! Shipped data: the three standard tuples (with and without the extra `g1`
//! entry), the certifying move sequences `q1`–`q3`, and the half-monodromy
//! word files for the two worked families. The same files live under
//! `data/` for use with the CLI.

pub const A1_TUP: &str = include_str!("../data/a1.tup");
pub const A2_TUP: &str = include_str!("../data/a2.tup");
pub const A3_TUP: &str = include_str!("../data/a3.tup");
pub const A1G1_TUP: &str = include_str!("../data/a1g1.tup");
pub const A2G1_TUP: &str = include_str!("../data/a2g1.tup");
pub const A3G1_TUP: &str = include_str!("../data/a3g1.tup");
pub const Q1_MOV: &str = include_str!("../data/q1.mov");
pub const Q2_MOV: &str = include_str!("../data/q2.mov");
pub const Q3_MOV: &str = include_str!("../data/q3.mov");
pub const EX41_WORDS: &str = include_str!("../data/ex41.words");
pub const EX42_WORDS: &str = include_str!("../data/ex42.words");

/// The shipped move sequence for lemma case 1, 2 or 3.
pub fn q_moves_text(case: u8) -> Option<&'static str> {
    match case {
        1 => Some(Q1_MOV),
        2 => Some(Q2_MOV),
        3 => Some(Q3_MOV),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::files::parse_moves_file;

    #[test]
    fn shipped_move_counts() {
        assert_eq!(parse_moves_file(Q1_MOV).unwrap().len(), 83);
        assert_eq!(parse_moves_file(Q2_MOV).unwrap().len(), 53);
        assert_eq!(parse_moves_file(Q3_MOV).unwrap().len(), 129);
    }
}
