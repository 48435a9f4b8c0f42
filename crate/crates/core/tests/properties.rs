//! Invariant and property tests, including the brute-force oracles that
//! back the design decisions (left-packing comparator, adjacency split).

use std::collections::HashSet;

use proptest::prelude::*;

use ntet::config::{axiom2_check, enumerate_basic, enumerate_valid};
use ntet::evolution::{convergence_report, evolution_table};
use ntet::ring::{cyclic_equivalent, gcd, mod_inverse, rotate_config};
use ntet::signature::{key_signature_at, signature_matrix, AliasMode};
use ntet::theory::{binary_value, canonical_generator, circle, gen_seq, inversion, prime_form};
use ntet::{KeyboardConfig, Modulus};

fn modulus(n: i64) -> Modulus {
    Modulus::new(n).unwrap()
}

/// All valid (n, n_w) classes at desk scale, with their configurations.
fn all_valid_classes(max_n: i64) -> Vec<(i64, i64, Vec<KeyboardConfig>)> {
    let mut out = Vec::new();
    for n in 2..=max_n {
        for n_w in (1..n).rev() {
            let valid = enumerate_valid(modulus(n), n_w);
            if !valid.is_empty() {
                out.push((n, n_w, valid));
            }
        }
    }
    out
}

proptest! {
    #[test]
    fn gcd_subtraction_law(a in 0i64..10_000, b in 1i64..10_000) {
        prop_assert_eq!(gcd(a, b).unwrap(), gcd(b, (a - b).abs()).unwrap());
    }

    #[test]
    fn mod_inverse_is_an_involution(n in 2i64..500, m in 1i64..500) {
        let m = m % n;
        prop_assume!(m >= 1);
        prop_assume!(gcd(m, n).unwrap() == 1);
        let k = mod_inverse(m, modulus(n)).unwrap();
        prop_assert_eq!(mod_inverse(k, modulus(n)).unwrap(), m);
    }

    #[test]
    fn cyclic_equivalence_is_an_equivalence(bits in prop::collection::vec(any::<bool>(), 1..16), d in 0usize..16) {
        let n = bits.len();
        // reflexive
        prop_assert_eq!(cyclic_equivalent(&bits, &bits).unwrap(), Some(0));
        // symmetric: a ~ rot(a, d) and back with offset n - d
        let rotated = rotate_config(&bits, d % n);
        prop_assert!(cyclic_equivalent(&bits, &rotated).unwrap().is_some());
        let back = cyclic_equivalent(&rotated, &bits).unwrap();
        prop_assert!(back.is_some());
        prop_assert_eq!(&rotate_config(&rotated, (n - d % n) % n), &bits);
        // transitive: a ~ b and b ~ c gives a ~ c
        let further = rotate_config(&rotated, (d + 3) % n);
        prop_assert!(cyclic_equivalent(&bits, &further).unwrap().is_some());
    }

    #[test]
    fn prime_form_is_class_invariant(
        n in 3i64..20,
        seed in prop::collection::btree_set(0i64..20, 1..12),
        shift in 0i64..20,
    ) {
        let m = modulus(n);
        let set: Vec<i64> = seed.into_iter().map(|x| m.reduce(x)).collect();
        let prime = prime_form(&set, m);
        let transposed: Vec<i64> = set.iter().map(|&x| m.reduce(x + shift)).collect();
        prop_assert_eq!(&prime_form(&transposed, m), &prime);
        prop_assert_eq!(&prime_form(&inversion(&set, m), m), &prime);
        // idempotent and anchored at zero
        prop_assert_eq!(&prime_form(&prime, m), &prime);
        prop_assert_eq!(prime[0], 0);
    }
}

#[test]
fn enumeration_matches_count_up_to_24() {
    use ntet::config::count_basic;
    for n in 1..=24 {
        assert_eq!(
            enumerate_basic(modulus(n)).len() as i64,
            count_basic(n).unwrap(),
            "n = {n}"
        );
    }
}

#[test]
fn valid_classes_are_coprime_and_bounded() {
    for n in 2..=24 {
        for n_w in 1..n {
            let valid = enumerate_valid(modulus(n), n_w);
            if valid.is_empty() {
                continue;
            }
            let n_b = n - n_w;
            assert_eq!(gcd(n, n_w).unwrap(), 1, "({n}, {n_w})");
            assert!(n_b >= n.div_ceil(3), "({n}, {n_w}) lower bound");
            assert!(n_b <= n / 2, "({n}, {n_w}) upper bound");
        }
    }
}

/// Independent maximal-evenness check: every generic interval (white-key
/// span of fixed length) covers at most two distinct chromatic sizes.
fn is_maximally_even(c: &KeyboardConfig) -> bool {
    let white = c.white_set();
    let n_w = white.len();
    let n = c.n();
    for span in 1..n_w {
        let sizes: HashSet<i64> = (0..n_w)
            .map(|i| c.modulus().reduce(white[(i + span) % n_w] - white[i]))
            .collect();
        if sizes.len() > 2 {
            return false;
        }
    }
    let _ = n;
    true
}

#[test]
fn axiom2_implies_maximal_evenness() {
    for n in 2..=14 {
        for c in enumerate_basic(modulus(n)) {
            if axiom2_check(&c).passed() {
                assert!(is_maximally_even(&c), "n = {n}, config {c}");
            }
        }
    }
}

#[test]
fn norms_are_congruent_to_t_times_nw() {
    for (n, n_w, valid) in all_valid_classes(24) {
        for c in &valid {
            for t in 0..n {
                let canonical = key_signature_at(c, t, AliasMode::Canonical).norm();
                assert_eq!(
                    canonical.rem_euclid(n),
                    (t * n_w).rem_euclid(n),
                    "({n}, {n_w}) t = {t}"
                );
                for mode in [AliasMode::Plus, AliasMode::Minus] {
                    let aliased = key_signature_at(c, t, mode).norm();
                    assert_eq!(
                        aliased.rem_euclid(n),
                        canonical.rem_euclid(n),
                        "({n}, {n_w}) t = {t} {mode:?}"
                    );
                }
            }
        }
    }
}

#[test]
fn column_sum_windows_slide_by_one() {
    for (n, n_w, valid) in all_valid_classes(24) {
        let n_b = n - n_w;
        for (i, c) in valid.iter().enumerate() {
            let sums = signature_matrix(c).unwrap().column_sums();
            assert_eq!(sums.max - sums.min, n - 1, "({n}, {n_w}) variant {}", i + 1);
            let shift = i as i64;
            assert_eq!(sums.max, n_w - shift, "({n}, {n_w}) variant {}", i + 1);
            assert_eq!(sums.min, -n_b + 1 - shift, "({n}, {n_w}) variant {}", i + 1);
        }
    }
}

#[test]
fn stepping_the_tonic_by_the_dominant_adds_one_sharp() {
    for (n, n_w, valid) in all_valid_classes(24) {
        let k = mod_inverse(n_w, modulus(n)).unwrap();
        for c in &valid {
            let max = signature_matrix(c).unwrap().column_sums().max;
            for t in 0..n {
                let here = key_signature_at(c, t, AliasMode::Canonical).norm();
                if here < max {
                    let next = key_signature_at(c, t + k, AliasMode::Canonical).norm();
                    assert_eq!(next, here + 1, "({n}, {n_w}) t = {t}");
                }
            }
        }
    }
}

#[test]
fn generating_window_shifts_replace_one_element() {
    for (n, n_w, valid) in all_valid_classes(24) {
        let m = modulus(n);
        for c in &valid {
            let g = canonical_generator(c).unwrap();
            let len = n_w as usize;
            let window: HashSet<i64> = gen_seq(g.s0, g.step, len, m).elements.into_iter().collect();
            let shifted: HashSet<i64> =
                gen_seq(g.s0 + g.step, g.step, len, m).elements.into_iter().collect();
            let transposed: HashSet<i64> =
                c.white_set().iter().map(|&w| m.reduce(w + g.step)).collect();
            assert_eq!(shifted, transposed, "({n}, {n_w})");
            assert_eq!(window.difference(&shifted).count(), 1, "({n}, {n_w})");
            assert_eq!(shifted.difference(&window).count(), 1, "({n}, {n_w})");
        }
    }
}

#[test]
fn leading_tones_are_where_the_window_leaves_the_scale() {
    for (n, n_w, valid) in all_valid_classes(24) {
        let m = modulus(n);
        for c in &valid {
            let g = canonical_generator(c).unwrap();
            let elements = gen_seq(g.s0, g.step, n_w as usize, m).elements;
            let white: HashSet<i64> = c.white_set().iter().copied().collect();
            let (last, rest) = elements.split_last().unwrap();
            for &e in rest {
                assert!(white.contains(&m.reduce(e + g.step)), "({n}, {n_w})");
            }
            assert!(!white.contains(&m.reduce(last + g.step)), "({n}, {n_w})");
            let (first, rest) = elements.split_first().unwrap();
            for &e in rest {
                assert!(white.contains(&m.reduce(e - g.step)), "({n}, {n_w})");
            }
            assert!(!white.contains(&m.reduce(first - g.step)), "({n}, {n_w})");
        }
    }
}

#[test]
fn circle_visits_every_tonic_once() {
    for (n, n_w, valid) in all_valid_classes(24) {
        for c in &valid {
            let entries = circle(c).unwrap();
            assert_eq!(entries[0].tonic, 0);
            assert_eq!(entries[0].norm, 0);
            let tonics: HashSet<i64> = entries.iter().map(|e| e.tonic).collect();
            assert_eq!(tonics.len(), n as usize, "({n}, {n_w})");
            for (j, e) in entries.iter().enumerate() {
                assert_eq!(
                    e.norm.rem_euclid(n),
                    (j as i64).rem_euclid(n),
                    "({n}, {n_w}) step {j}"
                );
            }
        }
    }
}

#[test]
fn variant_order_is_strictly_increasing_binary() {
    for (n, n_w, valid) in all_valid_classes(24) {
        let values: Vec<i64> = valid.iter().map(binary_value).collect();
        assert!(
            values.windows(2).all(|w| w[0] < w[1]),
            "({n}, {n_w}): {values:?}"
        );
    }
}

/// Brute-force reference for the prime form: the lexicographically smallest
/// zeroed rotation of the set or its inversion.
fn prime_form_lex_oracle(set: &[i64], m: Modulus) -> Vec<i64> {
    let n = m.get();
    let mut base: Vec<i64> = set.iter().map(|&x| m.reduce(x)).collect();
    base.sort_unstable();
    base.dedup();
    let inverted = inversion(&base, m);
    let mut best: Option<Vec<i64>> = None;
    for candidate in [&base, &inverted] {
        let len = candidate.len();
        for i in 0..len {
            let mut zeroed: Vec<i64> = (0..len)
                .map(|j| (candidate[(i + j) % len] - candidate[i]).rem_euclid(n))
                .collect();
            zeroed.sort_unstable();
            if best.as_ref().is_none_or(|b| &zeroed < b) {
                best = Some(zeroed);
            }
        }
    }
    best.unwrap()
}

#[test]
fn prime_form_matches_lexicographic_oracle_on_valid_classes() {
    for (n, n_w, valid) in all_valid_classes(24) {
        let m = modulus(n);
        for c in &valid {
            assert_eq!(
                prime_form(c.white_set(), m),
                prime_form_lex_oracle(c.white_set(), m),
                "({n}, {n_w})"
            );
        }
    }
}

#[test]
fn consecutive_w_are_coprime() {
    let table = evolution_table(20);
    let mut w_next = 5;
    for row in &table {
        assert_eq!(gcd(row.w, w_next).unwrap(), 1, "k = {}", row.k);
        w_next += row.w;
    }
}

/// The interleaved auxiliary recurrences: V restricted to odd (even) k
/// satisfies a Fibonacci-style recurrence seeded 1, 3 (1, 2), and likewise
/// U seeded 2, 1 (1, 1).
fn fib_like(a0: i64, a1: i64, len: usize) -> Vec<i64> {
    let mut v = vec![a0, a1];
    while v.len() < len {
        v.push(v[v.len() - 1] + v[v.len() - 2]);
    }
    v
}

#[test]
fn v_and_u_match_the_auxiliary_recurrences() {
    let table = evolution_table(20);
    let v_odd = fib_like(1, 3, 21);
    let v_even = fib_like(1, 2, 21);
    let u_odd = fib_like(2, 1, 21);
    let u_even = fib_like(1, 1, 21);
    for row in &table {
        let (v_aux, u_aux) = if row.k % 2 == 1 {
            (&v_odd, &u_odd)
        } else {
            (&v_even, &u_even)
        };
        assert_eq!(row.v, v_aux[row.k], "V at k = {}", row.k);
        assert_eq!(row.u, u_aux[row.k], "U at k = {}", row.k);
    }
}

#[test]
fn convergence_is_monotone_per_parity() {
    let rows = convergence_report(10);
    for pair in [0, 1] {
        let branch: Vec<f64> = rows
            .iter()
            .filter(|r| r.k % 2 == pair)
            .map(|r| r.deviation.abs())
            .collect();
        assert!(
            branch.windows(2).all(|w| w[1] < w[0]),
            "parity {pair}: {branch:?}"
        );
    }
}

const PAPER_MATRIX_12_7_2: [[i64; 12]; 7] = [
    [0, 0, 1, 0, 1, 0, 1, 0, 0, 1, 0, 1],
    [0, -1, 0, 0, 1, 0, 1, 0, -1, 0, 0, 1],
    [0, -1, 0, -1, 0, 0, 1, 0, -1, 0, -1, 0],
    [0, 0, 1, 0, 1, 0, 1, 1, 0, 1, 0, 1],
    [0, -1, 0, 0, 1, 0, 1, 0, 0, 1, 0, 1],
    [0, -1, 0, -1, 0, 0, 1, 0, -1, 0, 0, 1],
    [0, -1, 0, -1, 0, -1, 0, 0, -1, 0, -1, 0],
];

const PAPER_MATRIX_19_12_2: [[i64; 19]; 12] = [
    [0, 0, 1, 0, 1, 0, 0, 1, 0, 0, 1, 0, 1, 0, 0, 1, 0, 0, 1],
    [0, -1, 0, 0, 1, 0, -1, 0, 0, -1, 0, 0, 1, 0, -1, 0, 0, -1, 0],
    [0, 0, 1, 0, 1, 1, 0, 1, 0, 0, 1, 0, 1, 1, 0, 1, 0, 0, 1],
    [0, -1, 0, 0, 1, 0, 0, 1, 0, -1, 0, 0, 1, 0, 0, 1, 0, -1, 0],
    [0, 0, 1, 0, 1, 1, 0, 1, 1, 0, 1, 0, 1, 1, 0, 1, 1, 0, 1],
    [0, -1, 0, 0, 1, 0, 0, 1, 0, 0, 1, 0, 1, 0, 0, 1, 0, 0, 1],
    [0, -1, 0, -1, 0, 0, -1, 0, 0, -1, 0, 0, 1, 0, -1, 0, 0, -1, 0],
    [0, 0, 1, 0, 1, 0, 0, 1, 0, 0, 1, 0, 1, 1, 0, 1, 0, 0, 1],
    [0, -1, 0, 0, 1, 0, -1, 0, 0, -1, 0, 0, 1, 0, 0, 1, 0, -1, 0],
    [0, 0, 1, 0, 1, 1, 0, 1, 0, 0, 1, 0, 1, 1, 0, 1, 1, 0, 1],
    [0, -1, 0, 0, 1, 0, 0, 1, 0, -1, 0, 0, 1, 0, 0, 1, 0, 0, 1],
    [0, -1, 0, -1, 0, 0, -1, 0, 0, -1, 0, -1, 0, 0, -1, 0, 0, -1, 0],
];

#[test]
fn full_signature_matrices_match_published_displays() {
    let ionian: KeyboardConfig = "010100101010".parse().unwrap();
    let m12 = signature_matrix(&ionian).unwrap();
    for (r, row) in PAPER_MATRIX_12_7_2.iter().enumerate() {
        assert_eq!(m12.row(r), row, "12-TET row {}", r + 1);
    }

    let tet19 = KeyboardConfig::from_white_set(
        modulus(19),
        &[0, 2, 3, 5, 6, 8, 10, 11, 13, 14, 16, 18],
    )
    .unwrap();
    let m19 = signature_matrix(&tet19).unwrap();
    for (r, row) in PAPER_MATRIX_19_12_2.iter().enumerate() {
        assert_eq!(m19.row(r), row, "19-TET row {}", r + 1);
    }
}
