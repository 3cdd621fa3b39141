use conjstab_core::conjstab::{
    candidate_reps, candidate_reps_with, conjugacy_in_subgroup, decide_stability,
    decide_with_reps, in_double_coset, validate_certificate, CandidateOptions, Outcome,
};
use conjstab_core::corpus::corpus;
use conjstab_core::oracle::{enumerate_ball, BallSpec};
use conjstab_core::{Alphabet, Subgroup, Word};

fn ab() -> Alphabet {
    Alphabet::standard(2).unwrap()
}

fn w(s: &str) -> Word {
    ab().parse_word(s).unwrap()
}

fn sub(gens: &[&str]) -> Subgroup {
    Subgroup::new(&ab(), gens.iter().map(|s| w(s)).collect()).unwrap()
}

fn ball(radius: usize) -> Vec<Word> {
    enumerate_ball(&BallSpec::new(ab(), radius).unwrap()).unwrap()
}

/// Literal search: elements of `H` in a ball conjugating `u` to `v`.
fn literal_conjugator(h_members: &[Word], u: &Word, v: &Word) -> bool {
    h_members.iter().any(|x| u.conjugate_by(x) == *v)
}

#[test]
fn small_corpus_matches_literal_search() {
    // h ranges over H ∩ ball(8), which covers every conjugator bound for
    // these two-vertex-or-smaller witnesses; decider and literal search agree
    let big = ball(8);
    let small = ball(3);
    for case in corpus(&ab(), 2, 2).unwrap() {
        let h = &case.subgroup;
        let members: Vec<Word> = big.iter().filter(|x| h.accepts(x)).cloned().collect();
        let mut found = false;
        'outer: for u in small.iter().filter(|u| !u.is_identity() && h.accepts(u)) {
            for g in small.iter().filter(|g| !h.accepts(g)) {
                let v = u.conjugate_by(g);
                if h.accepts(&v) && !literal_conjugator(&members, u, &v) {
                    found = true;
                    break 'outer;
                }
            }
        }
        let report = decide_stability(h);
        if found {
            assert!(!report.is_stable(), "{:?}", case.presentations[0]);
        }
        if let Some(c) = &report.certificate {
            assert!(validate_certificate(h, c));
        }
    }
}

#[test]
fn verdict_invariant_under_double_coset_moves() {
    for case in corpus(&ab(), 2, 2).unwrap().into_iter().filter(|c| !c.subgroup.is_trivial()) {
        let h = &case.subgroup;
        let reps = candidate_reps(h).unwrap();
        let basis = h.basis();
        let baseline = decide_stability(h).verdict;
        for (i, x) in basis.iter().enumerate() {
            let y = &basis[(i + 1) % basis.len()];
            let moved: Vec<Word> = reps
                .iter()
                .map(|r| x.multiply(&r.g).multiply(&y.inverse()))
                .collect();
            for (r, m) in reps.iter().zip(&moved) {
                assert!(in_double_coset(h, &r.g, m).unwrap());
            }
            let report = decide_with_reps(h, &moved).unwrap();
            assert_eq!(report.verdict, baseline, "{:?}", case.presentations[0]);
        }
    }
}

#[test]
fn rank_two_shortcut_certificates() {
    for case in corpus(&ab(), 2, 3).unwrap() {
        let h = &case.subgroup;
        let report = decide_stability(h);
        for a in &report.analyses {
            if a.outcome == Outcome::FailRankGe2 {
                let basis = a.rep.intersection.basis();
                let (x, y) = (&basis[0], &basis[1]);
                assert!([x.clone(), y.clone(), x.multiply(y)]
                    .iter()
                    .any(|c| c.root().unwrap().exponent == 1));
            }
        }
        if let Some(c) = &report.certificate {
            assert!(validate_certificate(h, c));
        }
    }
    // two-generator corpus subgroups never meet a conjugate in rank two
    let h = sub(&["a", "baB", "bbaBB"]);
    let report = decide_stability(&h);
    assert!(report.analyses.iter().any(|a| a.outcome == Outcome::FailRankGe2));
    assert!(validate_certificate(&h, report.certificate.as_ref().unwrap()));
}

#[test]
fn dedupe_keeps_one_per_double_coset() {
    let h = sub(&["aa", "baaB", "bbb"]);
    let plain = candidate_reps_with(&h, CandidateOptions { dedupe_threshold: usize::MAX }).unwrap();
    let deduped = candidate_reps_with(&h, CandidateOptions { dedupe_threshold: 0 }).unwrap();
    assert!(!plain.is_empty());
    // pullback components already index distinct double cosets
    assert_eq!(plain, deduped);
    for (i, a) in deduped.iter().enumerate() {
        for b in &deduped[i + 1..] {
            assert!(!in_double_coset(&h, &a.g, &b.g).unwrap());
        }
    }
}

#[test]
fn conjugacy_in_subgroup_matches_literal_search() {
    let members_ball = ball(7);
    for gens in [vec!["aa", "baaB"], vec!["aa"], vec!["ab", "bA"], vec!["aab", "bb"]] {
        let h = sub(&gens);
        let members: Vec<Word> = members_ball.iter().filter(|x| h.accepts(x)).cloned().collect();
        let elements: Vec<&Word> = members.iter().filter(|x| x.len() <= 4).collect();
        for u in &elements {
            for v in &elements {
                let answer = conjugacy_in_subgroup(&h, u, v).unwrap();
                if let Some(x) = &answer {
                    assert!(h.accepts(x));
                    assert_eq!(u.conjugate_by(x), **v);
                } else {
                    assert!(!literal_conjugator(&members, u, v), "{gens:?}: {u:?} {v:?}");
                }
            }
        }
    }
}

#[test]
fn reports_are_deterministic() {
    let h = sub(&["aab", "bAb", "abab"]);
    assert_eq!(decide_stability(&h), decide_stability(&h));
}
