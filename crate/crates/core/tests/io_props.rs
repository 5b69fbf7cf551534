mod common;

use common::{field, random_matrix, SMALL_FIELDS};
use galois_hull::io::{format_code_file, parse_code_file};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

proptest! {
    #[test]
    fn parse_and_format_round_trip(i in 0usize..5, rows in 0usize..=6, cols in 1usize..=8, seed: u64) {
        let (p, e) = SMALL_FIELDS[i];
        let f = field(p, e);
        let m = random_matrix(&mut ChaCha8Rng::seed_from_u64(seed), &f, rows, cols);
        let text = format_code_file(&m);
        let (g, parsed) = parse_code_file(&text).unwrap();
        prop_assert_eq!(&g, &f);
        prop_assert_eq!(&parsed, &m);
        prop_assert_eq!(format_code_file(&parsed), text);
    }

    #[test]
    fn comments_and_blank_lines_are_ignored(i in 0usize..5, cols in 1usize..=6, seed: u64) {
        let (p, e) = SMALL_FIELDS[i];
        let f = field(p, e);
        let m = random_matrix(&mut ChaCha8Rng::seed_from_u64(seed), &f, 2, cols);
        let text = format_code_file(&m);
        let noisy: String = text.lines().flat_map(|l| ["# note", "", l]).collect::<Vec<_>>().join("\n");
        prop_assert_eq!(parse_code_file(&noisy).unwrap().1, m);
    }
}
