use std::collections::HashSet;

use conjstab_core::oracle::{enumerate_ball, BallSpec};
use conjstab_core::words::conjugate_in_free;
use conjstab_core::{Alphabet, Word};

fn ball(radius: usize) -> Vec<Word> {
    let spec = BallSpec::with_guard(Alphabet::standard(2).unwrap(), radius, radius).unwrap();
    enumerate_ball(&spec).unwrap()
}

/// Some `s` with `sᵐ = core`, found by comparing against every prefix power.
fn tiles(core: &Word, m: usize) -> bool {
    let n = core.len();
    n.is_multiple_of(m) && core.letters()[..n / m].iter().cycle().take(n).eq(core.letters().iter())
}

#[test]
fn root_is_sound_and_maximal_up_to_length_12() {
    for w in ball(12).into_iter().skip(1) {
        let r = w.root().unwrap();
        assert_eq!(r.root.pow(r.exponent as i64), w, "{w:?}");
        let (_, core) = w.cyclic_reduce();
        for m in r.exponent + 1..=core.len() {
            assert!(!tiles(&core, m), "{w:?} is an {m}-th power");
        }
        // the root itself is not a proper power
        assert_eq!(r.root.root().unwrap().exponent, 1, "{w:?}");
    }
}

#[test]
fn conjugacy_agrees_with_conjugator_search() {
    let short = ball(4);
    let conjugators = ball(6);
    for u in &short {
        let orbit: HashSet<Word> = conjugators.iter().map(|t| u.conjugate_by(t)).collect();
        for v in &short {
            let found = conjugate_in_free(u, v);
            assert_eq!(found.is_some(), orbit.contains(v), "{u:?} ~ {v:?}");
            if let Some(t) = found {
                assert_eq!(u.conjugate_by(&t), *v);
            }
        }
    }
}
