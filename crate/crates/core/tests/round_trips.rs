use proptest::prelude::*;

use sect_shell::phi::{uncross, ScanOrder};
use sect_shell::{
    clan_length, clan_to_rooks, enumerate_sect, involution_length, matchless_to_partition,
    partial_permutation, partition_to_matchless, rank_leq, rooks_to_clan, sect_of,
    underlying_involution, Clan, Partition,
};

/// A random `(p,q)`-clan: shuffle the positions, pair off the first `2k`,
/// then hand out `p - k` plus signs and `q - k` minus signs.
fn clan_strategy() -> impl Strategy<Value = Clan> {
    (0usize..=5, 0usize..=5)
        .prop_filter("non-empty", |(p, q)| p + q > 0)
        .prop_flat_map(|(p, q)| {
            let n = p + q;
            let order = Just((0..n).collect::<Vec<_>>()).prop_shuffle();
            (Just(p), Just(q), 0..=p.min(q), order)
        })
        .prop_map(|(p, q, k, order)| {
            let mut tokens = vec![String::new(); p + q];
            for (pair, chunk) in order[..2 * k].chunks(2).enumerate() {
                for &pos in chunk {
                    tokens[pos] = (pair + 1).to_string();
                }
            }
            for (x, &pos) in order[2 * k..].iter().enumerate() {
                tokens[pos] = if x < p - k { "+" } else { "-" }.to_string();
            }
            Clan::parse(&tokens.join(" "), p, q).expect("construction obeys the clan rules")
        })
}

fn sect_triple() -> impl Strategy<Value = (Vec<Clan>, usize, usize, usize)> {
    (1usize..=3, 1usize..=3)
        .prop_flat_map(|(p, q)| {
            let shapes = Partition::all_in_box(p, q);
            (Just(p), Just(q), prop::sample::select(shapes))
        })
        .prop_flat_map(|(p, q, lambda)| {
            let sect = enumerate_sect(p, q, &lambda).unwrap();
            let n = sect.len();
            (Just(sect), 0..n, 0..n, 0..n)
        })
}

proptest! {
    #[test]
    fn text_forms_round_trip(clan in clan_strategy()) {
        let (p, q) = (clan.p(), clan.q());
        prop_assert_eq!(Clan::parse(&clan.render_tokens(), p, q).unwrap(), clan.clone());
        let compact = clan.render_compact().unwrap();
        prop_assert_eq!(Clan::parse(&compact, p, q).unwrap(), clan.clone());
        prop_assert_eq!(clan.to_string(), compact);
    }

    #[test]
    fn rooks_round_trip(clan in clan_strategy()) {
        let rooks = clan_to_rooks(&clan);
        prop_assert_eq!(rooks.rooks().len(), clan.pair_count());
        prop_assert_eq!(rooks_to_clan(&rooks, clan.p(), clan.q()).unwrap(), clan);
    }

    #[test]
    fn base_clan_and_partition_round_trip(clan in clan_strategy()) {
        let base = clan.base_clan();
        prop_assert_eq!(base.base_clan(), base.clone());
        let lambda = matchless_to_partition(&base).unwrap();
        prop_assert!(lambda.fits(clan.p(), clan.q()));
        prop_assert_eq!(partition_to_matchless(&lambda, clan.p(), clan.q()).unwrap(), base);
        let rendered = lambda.to_string();
        prop_assert_eq!(rendered.parse::<Partition>().unwrap(), lambda.clone());
        prop_assert_eq!(sect_of(&clan), lambda);
    }

    #[test]
    fn lengths_agree(clan in clan_strategy()) {
        prop_assert_eq!(clan_length(&clan), involution_length(&underlying_involution(&clan)));
    }

    #[test]
    fn uncrossing_is_confluent(clan in clan_strategy()) {
        let left = uncross(&clan, ScanOrder::Leftmost);
        prop_assert_eq!(left.clone(), uncross(&clan, ScanOrder::Rightmost));
        prop_assert_eq!(uncross(&left, ScanOrder::Leftmost), left);
    }

    #[test]
    fn phi_extends_the_visible_rooks(clan in clan_strategy()) {
        let phi = partial_permutation(&clan);
        let rooks = clan_to_rooks(&clan);
        for &(k, l) in rooks.rooks() {
            prop_assert_eq!(phi.get(k), l);
        }
        prop_assert!(phi.nonzero_count() >= clan.pair_count());
    }

    #[test]
    fn tableau_order_is_a_partial_order((sect, x, y, z) in sect_triple()) {
        let r: Vec<_> = [x, y, z].iter().map(|&i| clan_to_rooks(&sect[i])).collect();
        let leq = |a: usize, b: usize| rank_leq(&r[a], &r[b]).unwrap();
        prop_assert!(leq(0, 0));
        prop_assert!(rank_leq(&clan_to_rooks(&sect[0]), &r[0]).unwrap());
        if leq(0, 1) && leq(1, 0) {
            prop_assert_eq!(&sect[x], &sect[y]);
        }
        if leq(0, 1) && leq(1, 2) {
            prop_assert!(leq(0, 2));
        }
    }
}
