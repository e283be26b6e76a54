//! Pseudo-polynomial PB and SS for weighted games: count the other players'
//! coalitions by total weight (and size, for SS) and read off the swings
//! from the window `[quota - w_i, quota - 1]`.

use num_bigint::{BigInt, BigUint};
use num_traits::Zero;

use super::{MeasureKind, PlayerPower, PowerMeasure, PowerReport};
use crate::error::{Error, Result};
use crate::game::{total_weight, Game, Limits};
use crate::rational::{factorial, Rational};

#[derive(Clone, Copy, Debug, Default)]
pub struct BanzhafFast {
    pub limits: Limits,
}

impl PowerMeasure for BanzhafFast {
    fn kind(&self) -> MeasureKind {
        MeasureKind::Pb
    }

    fn name(&self) -> &'static str {
        "pb-fast"
    }

    fn power(&self, game: &Game) -> Result<PowerReport> {
        pb_fast(game, &self.limits)
    }
}

#[derive(Clone, Copy, Debug, Default)]
pub struct ShapleyShubikFast {
    pub limits: Limits,
}

impl PowerMeasure for ShapleyShubikFast {
    fn kind(&self) -> MeasureKind {
        MeasureKind::Ss
    }

    fn name(&self) -> &'static str {
        "ss-fast"
    }

    fn power(&self, game: &Game) -> Result<PowerReport> {
        ss_fast(game, &self.limits)
    }
}

fn weighted_parts<'g>(game: &'g Game, limits: &Limits) -> Result<(usize, &'g [u64])> {
    let (quota, weights) = game.weights().ok_or(Error::NotWeighted)?;
    let sum = total_weight(weights);
    if sum > limits.max_weight_sum {
        return Err(Error::WeightSumTooLarge { sum, max: limits.max_weight_sum });
    }
    Ok((*quota as usize, weights))
}

pub fn pb_fast(game: &Game, limits: &Limits) -> Result<PowerReport> {
    let (quota, weights) = weighted_parts(game, limits)?;
    let n = weights.len();
    let denom = BigInt::from(1u8) << n;
    let players = (0..n)
        .map(|i| {
            // counts[w]: coalitions of the others with weight w < quota.
            let mut counts = vec![0u128; quota];
            counts[0] = 1;
            for (j, &w) in weights.iter().enumerate() {
                let w = w as usize;
                if j == i || w >= quota {
                    continue;
                }
                for s in (w..quota).rev() {
                    counts[s] += counts[s - w];
                }
            }
            let low = quota.saturating_sub(weights[i] as usize);
            let swings: u128 = counts[low..].iter().sum();
            let half = Rational::new(BigInt::from(swings), denom.clone());
            PlayerPower::new(half.clone(), half)
        })
        .collect();
    Ok(PowerReport::new(MeasureKind::Pb, players))
}

pub fn ss_fast(game: &Game, limits: &Limits) -> Result<PowerReport> {
    let (quota, weights) = weighted_parts(game, limits)?;
    let n = weights.len();
    let facts: Vec<BigUint> = (0..=n).map(factorial).collect();
    let denom: BigInt = BigInt::from(facts[n].clone()) * 2u32;
    let players = (0..n)
        .map(|i| {
            // counts[k][w]: k-player coalitions of the others with weight w < quota.
            let mut counts = vec![vec![0u128; quota]; n];
            counts[0][0] = 1;
            let mut seen = 0;
            for (j, &w) in weights.iter().enumerate() {
                if j == i {
                    continue;
                }
                seen += 1;
                let w = w as usize;
                if w >= quota {
                    continue;
                }
                for k in (1..=seen).rev() {
                    let (lower, upper) = counts.split_at_mut(k);
                    for s in (w..quota).rev() {
                        upper[0][s] += lower[k - 1][s - w];
                    }
                }
            }
            let low = quota.saturating_sub(weights[i] as usize);
            let mut half = BigUint::zero();
            for (k, row) in counts.iter().enumerate() {
                let swings: u128 = row[low..].iter().sum();
                if swings > 0 {
                    half += BigUint::from(swings) * &facts[k] * &facts[n - 1 - k];
                }
            }
            let half = Rational::new(half.into(), denom.clone());
            PlayerPower::new(half.clone(), half)
        })
        .collect();
    Ok(PowerReport::new(MeasureKind::Ss, players))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::measures::{pb, ss};
    use crate::rational::ratio;

    #[test]
    fn g311_matches_enumeration() {
        let g = Game::weighted(3, vec![2, 1, 1]).unwrap();
        let fast = ss_fast(&g, &Limits::default()).unwrap();
        assert_eq!(fast.totals(), vec![ratio(2, 3), ratio(1, 6), ratio(1, 6)]);
        assert_eq!(fast, ss(&g).unwrap());
        assert_eq!(pb_fast(&g, &Limits::default()).unwrap(), pb(&g).unwrap());
    }

    #[test]
    fn g11222_matches_enumeration() {
        let g = Game::weighted(2, vec![1, 1, 2, 2, 2]).unwrap();
        assert_eq!(pb_fast(&g, &Limits::default()).unwrap(), pb(&g).unwrap());
        assert_eq!(ss_fast(&g, &Limits::default()).unwrap(), ss(&g).unwrap());
    }

    #[test]
    fn unanimity_twenty() {
        let report = pb_fast(&Game::unanimity(20), &Limits::default()).unwrap();
        assert!(report.totals().iter().all(|t| *t == ratio(1, 1 << 19)));
    }

    #[test]
    fn errors() {
        let explicit = Game::unanimity(3).to_explicit();
        assert_eq!(pb_fast(&explicit, &Limits::default()), Err(Error::NotWeighted));
        let heavy = Game::weighted(10, vec![1_000_000, 5]).unwrap();
        assert!(matches!(ss_fast(&heavy, &Limits::default()), Err(Error::WeightSumTooLarge { .. })));
    }
}
