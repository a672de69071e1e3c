use crate::clan::Clan;
use crate::error::Result;
use crate::involution::clan_length;
use crate::partition::{matchless_to_partition, Partition};
use crate::phi::partial_permutation;
use crate::rook::{rooks_to_clan, RookPlacement};

/// The partition indexing the sect containing `clan`.
pub fn sect_of(clan: &Clan) -> Partition {
    matchless_to_partition(&clan.base_clan()).expect("base clan is matchless")
}

/// All rook placements of shape `lambda`, by backtracking over columns. For
/// each column the empty choice comes first, then heights in increasing order.
pub fn rook_placements(lambda: &Partition, p: usize, q: usize) -> Result<Vec<RookPlacement>> {
    lambda.check_fits(p, q)?;
    fn go(
        column: usize,
        lambda: &Partition,
        p: usize,
        q: usize,
        used: &mut Vec<bool>,
        current: &mut Vec<(usize, usize)>,
        out: &mut Vec<Vec<(usize, usize)>>,
    ) {
        if column > q {
            out.push(current.clone());
            return;
        }
        go(column + 1, lambda, p, q, used, current, out);
        let bottom = p - lambda.column_length(column);
        for height in bottom + 1..=p {
            if used[height] {
                continue;
            }
            used[height] = true;
            current.push((column, height));
            go(column + 1, lambda, p, q, used, current, out);
            current.pop();
            used[height] = false;
        }
    }
    let mut raw = Vec::new();
    go(
        1,
        lambda,
        p,
        q,
        &mut vec![false; p + 1],
        &mut Vec::new(),
        &mut raw,
    );
    Ok(raw
        .into_iter()
        .map(|rooks| {
            RookPlacement::new(lambda.clone(), p, q, rooks).expect("backtracking keeps rooks valid")
        })
        .collect())
}

/// Every clan of the sect indexed by `lambda`, sorted by length and then by
/// partial permutation.
pub fn enumerate_sect(p: usize, q: usize, lambda: &Partition) -> Result<Vec<Clan>> {
    let mut keyed = rook_placements(lambda, p, q)?
        .iter()
        .map(|r| {
            let clan = rooks_to_clan(r, p, q)?;
            Ok(((clan_length(&clan), partial_permutation(&clan)), clan))
        })
        .collect::<Result<Vec<_>>>()?;
    keyed.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(keyed.into_iter().map(|(_, c)| c).collect())
}
