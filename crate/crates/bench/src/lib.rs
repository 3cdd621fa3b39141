//! Deterministic inputs shared by the criterion benches.

use conjstab_core::{Alphabet, Letter, Word};

/// Generators whose letters total `total_letters`, built from a fixed linear
/// congruential sequence so runs are reproducible.
pub fn bouquet_words(alphabet: &Alphabet, total_letters: usize, word_len: usize) -> Vec<Word> {
    let mut state: u64 = 0x2545_f491_4f6c_dd1d;
    let mut next = move || {
        state = state
            .wrapping_mul(6_364_136_223_846_793_005)
            .wrapping_add(1_442_695_040_888_963_407);
        (state >> 33) as u32
    };
    let width = alphabet.num_letters() as u32;
    let mut words = Vec::new();
    let mut used = 0;
    while used < total_letters {
        let len = word_len.min(total_letters - used);
        let mut letters: Vec<Letter> = Vec::with_capacity(len);
        while letters.len() < len {
            let l = Letter::from_code(next() % width);
            if letters.last() != Some(&l.inverse()) {
                letters.push(l);
            }
        }
        used += len;
        words.push(Word::from_letters(letters));
    }
    words
}
