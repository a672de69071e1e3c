//! The minimal covering clan on every interval of every small sect.

use sect_shell::{interval_context, mcc_cover, sect_leq, Partition, SectPoset};

#[test]
fn minimal_covering_clan_is_the_least_atom_and_below_the_top() {
    let mut intervals = 0;
    for n in 2..=6 {
        for p in 1..n {
            let q = n - p;
            for lambda in Partition::all_in_box(p, q) {
                let poset = SectPoset::build(p, q, &lambda).unwrap();
                for x in 0..poset.len() {
                    for y in 0..poset.len() {
                        if x == y || !poset.leq(x, y) {
                            continue;
                        }
                        intervals += 1;
                        let (gamma, tau) = (poset.element(x), poset.element(y));
                        let ctx = interval_context(gamma, tau).unwrap();
                        let cover = mcc_cover(gamma, tau).unwrap();
                        let target = poset.index_of(&cover.target).unwrap();
                        assert!(poset.edge(x, target).is_some());
                        assert!(poset.leq(target, y));
                        assert!(sect_leq(&cover.target, tau).unwrap());

                        let atoms: Vec<_> = poset
                            .up_edges(x)
                            .iter()
                            .filter(|e| poset.leq(e.to, y))
                            .collect();
                        let least = atoms.iter().map(|e| e.label).min().unwrap();
                        assert_eq!(cover.label, least, "[{gamma}, {tau}]");
                        assert_eq!(ctx.label(), least);
                        assert_eq!(atoms.iter().filter(|e| e.label == least).count(), 1);
                        if ctx.entering.is_empty() {
                            assert!(ctx.differ.contains(&ctx.action_index));
                        } else {
                            // An entry point need not gain a rook in tau:
                            // from --+ the only way up to 1-1 is via -11.
                            assert_eq!(ctx.phi_lower.get(ctx.action_index), 0);
                            assert!(ctx.entry_points.contains(&ctx.action_index));
                            assert!(ctx.action_index >= ctx.entering[0]);
                        }
                        assert!(ctx.entering.iter().all(|k| ctx.differ.contains(k)));
                    }
                }
            }
        }
    }
    assert!(intervals > 1000);
}
