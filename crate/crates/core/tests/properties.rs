use beatty::criteria::{self, PartitionVerdict};
use beatty::disjointness::{self, DisjointnessFinding};
use beatty::oracle;
use beatty::stadium::{Athlete, StadiumConfig};
use beatty::{parse_real, BeattySeq, ExactReal, Rational};
use proptest::prelude::*;

const RADICANDS: [u64; 6] = [2, 3, 5, 6, 7, 13];

fn quadratic() -> impl Strategy<Value = ExactReal> {
    (-50i64..50, 1i64..12, -20i64..20, 1i64..12, 0..RADICANDS.len()).prop_map(|(an, ad, bn, bd, i)| {
        ExactReal::quadratic(Rational::new(an, ad), Rational::new(bn, bd), RADICANDS[i]).unwrap()
    })
}

/// A quadratic irrational modulus in `(1, 6)`.
fn modulus() -> impl Strategy<Value = ExactReal> {
    quadratic().prop_filter("irrational in (1, 6)", |a| {
        a.is_irrational() && *a > ExactReal::one() && *a < ExactReal::integer(6)
    })
}

fn complementary_of(a: &ExactReal) -> ExactReal {
    a.div(&a.sub(&ExactReal::one()).unwrap()).unwrap()
}

fn offset(alpha: &ExactReal, num: i64, den: i64) -> ExactReal {
    alpha.mul(&ExactReal::ratio(num % den, den)).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn display_parse_round_trip(v in quadratic()) {
        prop_assert_eq!(parse_real(&v.to_string()).unwrap(), v);
    }

    #[test]
    fn json_round_trip(v in quadratic()) {
        let text = serde_json::to_string(&v).unwrap();
        prop_assert_eq!(serde_json::from_str::<ExactReal>(&text).unwrap(), v);
    }

    #[test]
    fn separation_is_constant_at_integer_times(a in modulus(), n1 in 0i64..40, n2 in 0i64..40, k in -500i64..500) {
        let b = complementary_of(&a);
        let c = StadiumConfig::new(a.clone(), offset(&a, n1, 41), b.clone(), offset(&b, n2, 43)).unwrap();
        let d0 = c.d0().unwrap();
        prop_assert_eq!(c.separation(&ExactReal::integer(k)).unwrap(), d0);
    }

    #[test]
    fn occupancy_is_membership(a in modulus(), n1 in 0i64..40, n2 in 0i64..40, k in -1000i64..1000) {
        let b = complementary_of(&a);
        let c = StadiumConfig::new(a.clone(), offset(&a, n1, 41), b.clone(), offset(&b, n2, 43)).unwrap();
        let o = c.domain_occupancy(k).unwrap();
        prop_assert_eq!(o.in_a, c.x.is_member(k).unwrap());
        prop_assert_eq!(o.in_b, c.y.is_member(k).unwrap());
    }

    /// With the integrality condition and a passage at an integer time, the
    /// athletes meet on the recording point at `n0` and on the edge at `n0 - 1`.
    #[test]
    fn exceptional_meetings(a in modulus(), t in -300i64..300, laps in -5i64..5, c in -2i64..3) {
        let b = complementary_of(&a);
        let beta1 = ExactReal::integer(t).sub(&a.mul_int(laps)).unwrap();
        let s1 = BeattySeq::new(a.clone(), beta1).unwrap().normalize().unwrap().0;
        let rest = ExactReal::integer(c).sub(&s1.beta().div(&a).unwrap()).unwrap();
        let s2 = BeattySeq::new(b.clone(), b.mul(&rest).unwrap()).unwrap().normalize().unwrap().0;

        let verdict = criteria::skolem_classify(&s1, &s2).unwrap();
        prop_assert_eq!(&verdict, &PartitionVerdict::EventualPartitionWithException { n0: t });
        let st = StadiumConfig::from_seqs(&s1, &s2).unwrap();
        prop_assert_eq!(st.meeting_point(&ExactReal::integer(t)).unwrap(), Some(ExactReal::zero()));
        prop_assert_eq!(st.meeting_point(&ExactReal::integer(t - 1)).unwrap(), Some(st.edge().unwrap()));
        let o = st.domain_occupancy(t - 1).unwrap();
        prop_assert!(!o.in_a && !o.in_b);
        prop_assert_eq!(
            oracle::verify_eventual(&s1, &s2, t - 50, t + 50).unwrap(),
            verdict
        );
    }

    #[test]
    fn simulated_records_match_closed_form(a in modulus(), b in modulus(), n1 in 0i64..40, n2 in 0i64..40, lo in -300i64..300) {
        prop_assume!(a.common_radicand(&b).is_ok());
        let c = StadiumConfig::new(a.clone(), offset(&a, n1, 41), b.clone(), offset(&b, n2, 43)).unwrap();
        let ev = c.simulate_two(lo, lo + 200).unwrap();
        let rec = |who| ev.iter().filter(|e| e.athlete == who).map(|e| e.recorded).collect::<Vec<_>>();
        prop_assert_eq!(rec(Athlete::X), c.x.values_in(lo, lo + 200).unwrap());
        prop_assert_eq!(rec(Athlete::Y), c.y.values_in(lo, lo + 200).unwrap());
        for e in &ev {
            prop_assert_eq!(e.recorded, e.time.floor_i64().unwrap());
        }
    }

    /// A pair the window scan finds disjoint is never one that Skolem's
    /// necessary condition rules out.
    #[test]
    fn skolem_necessary_is_sound(a in modulus(), b in modulus(), n1 in 0i64..8, n2 in 0i64..8) {
        prop_assume!(a.common_radicand(&b).is_ok());
        let s1 = BeattySeq::new(a.clone(), offset(&a, n1, 8)).unwrap();
        let s2 = BeattySeq::new(b.clone(), offset(&b, n2, 8)).unwrap();
        let finding = disjointness::skolem_necessary(&s1, &s2).unwrap();
        if finding == DisjointnessFinding::Neither {
            prop_assert!(oracle::first_common(&s1, &s2, -10_000, 10_000).unwrap().is_some());
        }
    }

    #[test]
    fn fraenkel_matches_oracle(r in 2i64..15, s_raw in 1i64..14, i in 0i64..400, j in 0i64..400) {
        let s = 1 + s_raw % (r - 1);
        prop_assume!(num_integer::gcd(r, s) == 1);
        let (b1, b2) = (ExactReal::ratio(i, 17), ExactReal::ratio(j, 19));
        let (s1, s2) = criteria::fraenkel_pair(r, s, &b1, &b2).unwrap();
        let holds = criteria::fraenkel_condition(r, s, &b1, &b2).unwrap();
        prop_assert_eq!(holds, oracle::verify_partition(&[s1, s2], -3 * r * r, 3 * r * r).unwrap());
        prop_assert!(criteria::lemma_conditions(r, s, &b1, &b2).unwrap().all_agree());
    }
}

#[test]
fn skolem_sufficiency_on_canonical_offsets() {
    // Integer multiples of a complementary pair with offsets meeting the
    // integrality condition are disjoint.
    let phi = parse_real("1/2+1/2*sqrt(5)").unwrap();
    let phi2 = parse_real("3/2+1/2*sqrt(5)").unwrap();
    let half = parse_real("1/2").unwrap();
    for (m, n) in [(1, 1), (1, 3), (2, 2), (3, 1), (3, 3)] {
        let (a1, a2) = (phi.mul_int(m), phi2.mul_int(n));
        // beta/alpha = 1/2 for both, so m/2 + n/2 is an integer
        let (b1, b2) = (a1.mul(&half).unwrap(), a2.mul(&half).unwrap());
        let (s1, s2) = (BeattySeq::new(a1, b1).unwrap(), BeattySeq::new(a2, b2).unwrap());
        assert_eq!(
            disjointness::skolem_necessary(&s1, &s2).unwrap(),
            DisjointnessFinding::MNWitness { m, n }
        );
        assert!(oracle::disjoint_window(&s1, &s2, -10_000, 10_000).unwrap().is_empty());
    }
}

#[test]
fn gamma_witnesses_pass_window_check() {
    for g in ["1*sqrt(5)", "1*sqrt(7)", "1+1*sqrt(2)", "2+1*sqrt(2)", "3+1*sqrt(3)", "1/2+1*sqrt(6)"] {
        let gamma = parse_real(g).unwrap();
        for (r, s) in [(1, 1), (1, 2), (2, 1), (2, 3), (3, 5), (4, 7)] {
            let w = disjointness::gamma_witness(&gamma, r, s).unwrap();
            let (s1, s2) = w.sequences(&gamma, r, s).unwrap();
            assert!(oracle::disjoint_window(&s1, &s2, -10_000, 10_000).unwrap().is_empty());
        }
    }
}

#[test]
fn irrational_ratio_coprimality_follows_mn_solution() {
    // 2/(2*phi) + 2/(2*phi^2) = 1; equal moduli have no such (m, n).
    let phi = parse_real("1/2+1/2*sqrt(5)").unwrap();
    let phi2 = parse_real("3/2+1/2*sqrt(5)").unwrap();
    assert_eq!(
        disjointness::mn_solution(&phi.mul_int(2), &phi2.mul_int(2)).unwrap(),
        Some((2, 2))
    );
    assert_eq!(disjointness::mn_solution(&phi, &phi).unwrap(), None);
    let (s1, s2) = (
        BeattySeq::new(phi.clone(), ExactReal::zero()).unwrap(),
        BeattySeq::new(phi.clone(), ExactReal::ratio(1, 2)).unwrap(),
    );
    assert_eq!(disjointness::skolem_necessary(&s1, &s2).unwrap(), DisjointnessFinding::RationalRatio);
}
