//! Multi-species cuckoo search: m competing cuckoo species, a host-nest
//! population with per-nest egg ownership, inter-species swap competition,
//! abandonment dynamics and elitism.
//!
//! One generation runs `n` egg-laying events (species chosen proportionally
//! to population, cuckoo and target nest uniform), then one swap per
//! unordered species pair, then an abandonment check on every nest, then
//! elitism: each species' recorded best and the best host-owned egg are
//! re-asserted into the next generation.

use crate::cs::{levy_flight, local_walk_ungated, LevyParams, TrialResult};
use crate::error::{Error, Result};
use crate::problem::{clamp_and_snap, Evaluator, ObjectiveProblem, PenaltyConfig};
use crate::rng::{distinct_random_pair, random_binary_mask, LevySampler, RngStream};
use crate::scalar::Scalar;

/// Who currently owns an egg in a nest.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EggOwner {
    Host,
    Cuckoo(usize),
}

/// One candidate solution placed in a nest.
#[derive(Debug, Clone)]
pub struct Egg<R> {
    pub x: Vec<R>,
    pub fitness: R,
    pub owner: EggOwner,
}

/// A fixed-capacity group of `q` eggs.
#[derive(Debug, Clone)]
pub struct Nest<R> {
    pub eggs: Vec<Egg<R>>,
}

impl<R: Scalar> Nest<R> {
    pub fn cuckoo_fraction(&self) -> f64 {
        let c = self
            .eggs
            .iter()
            .filter(|e| matches!(e.owner, EggOwner::Cuckoo(_)))
            .count();
        c as f64 / self.eggs.len() as f64
    }

    fn worst_index(&self) -> usize {
        let mut idx = 0;
        for (i, e) in self.eggs.iter().enumerate() {
            if e.fitness > self.eggs[idx].fitness {
                idx = i;
            }
        }
        idx
    }

    fn best_index(&self) -> usize {
        let mut idx = 0;
        for (i, e) in self.eggs.iter().enumerate() {
            if e.fitness < self.eggs[idx].fitness {
                idx = i;
            }
        }
        idx
    }
}

/// A cuckoo: position plus cached fitness.
#[derive(Debug, Clone)]
pub struct Cuckoo<R> {
    pub x: Vec<R>,
    pub fitness: R,
}

/// Recorded best solution (position, fitness).
#[derive(Debug, Clone)]
pub struct BestRecord<R> {
    pub x: Vec<R>,
    pub fitness: R,
}

/// One cuckoo species with its running best.
#[derive(Debug, Clone)]
pub struct SpeciesPop<R> {
    pub cuckoos: Vec<Cuckoo<R>>,
    /// Best solution the species has produced so far; never worse than any
    /// current member.
    pub best: BestRecord<R>,
}

/// Engine parameters.
#[derive(Debug, Clone)]
pub struct MscsParams {
    /// Per-species population sizes; the species count is `n_i.len()`.
    pub n_i: Vec<usize>,
    /// Eggs laid per cuckoo per visit.
    pub r: usize,
    /// Nest count.
    pub w: usize,
    /// Eggs per nest.
    pub q: usize,
    /// Discovery probability in [0, 1].
    pub p_a: f64,
    pub levy: LevyParams,
    pub t_max: usize,
    pub max_fe: Option<u64>,
    pub seed: u64,
}

impl MscsParams {
    /// Standard experiment settings: two species of 20 cuckoos, 20 nests of
    /// 4 eggs, `r = 1`, `p_a = 0.25`.
    pub fn standard(seed: u64) -> Self {
        Self {
            n_i: vec![20, 20],
            r: 1,
            w: 20,
            q: 4,
            p_a: 0.25,
            levy: LevyParams::default(),
            t_max: 1000,
            max_fe: None,
            seed,
        }
    }

    pub fn species_count(&self) -> usize {
        self.n_i.len()
    }

    pub fn total_cuckoos(&self) -> usize {
        self.n_i.iter().sum()
    }

    pub fn validate(&self) -> Result<()> {
        if self.n_i.is_empty() || self.n_i.iter().any(|&n| n == 0) {
            return Err(Error::ParameterDomain(
                "need at least one species, each with at least one cuckoo".into(),
            ));
        }
        if self.r < 1 || self.w < 1 || self.q < 1 {
            return Err(Error::ParameterDomain(
                "r, w and q must all be at least 1".into(),
            ));
        }
        if !(0.0..=1.0).contains(&self.p_a) {
            return Err(Error::ParameterDomain("p_a must lie in [0, 1]".into()));
        }
        if self.w * self.q < self.total_cuckoos() {
            return Err(Error::ParameterDomain(
                "host egg pool w*q must be at least the cuckoo population".into(),
            ));
        }
        if self.t_max < 1 {
            return Err(Error::ParameterDomain("t_max must be at least 1".into()));
        }
        self.levy.validate()
    }
}

/// Full engine state.
#[derive(Debug, Clone)]
pub struct MscsState<R> {
    pub species: Vec<SpeciesPop<R>>,
    pub nests: Vec<Nest<R>>,
    /// Best host-owned egg recorded so far (g_h*).
    pub best_host: BestRecord<R>,
    /// Best solution ever evaluated (x*).
    pub overall_best: BestRecord<R>,
    pub iteration: usize,
}

impl<R: Scalar> MscsState<R> {
    /// Best cuckoo over all species (g_cs*).
    pub fn best_cuckoo(&self) -> &BestRecord<R> {
        self.species
            .iter()
            .map(|s| &s.best)
            .min_by(|a, b| a.fitness.partial_cmp(&b.fitness).unwrap())
            .expect("at least one species")
    }

    fn observe(&mut self, x: &[R], fitness: R) {
        if fitness < self.overall_best.fitness {
            self.overall_best = BestRecord { x: x.to_vec(), fitness };
        }
    }
}

fn uniform_point<R: Scalar>(problem: &ObjectiveProblem<R>, rng: &mut RngStream) -> Vec<R> {
    let x: Vec<R> = (0..problem.dim)
        .map(|d| rng.uniform(problem.lower[d], problem.upper[d]))
        .collect();
    clamp_and_snap(&x, problem)
}

/// Draw all cuckoos and all `w * q` host eggs uniformly in bounds and
/// evaluate them; `fe_used` afterwards equals `n + w * q`.
pub fn init_state<R: Scalar>(
    params: &MscsParams,
    ev: &mut Evaluator<'_, R>,
    rng: &mut RngStream,
) -> Result<MscsState<R>> {
    let problem = ev.problem();
    let mut overall_best = BestRecord { x: Vec::new(), fitness: R::infinity() };

    let mut species = Vec::with_capacity(params.species_count());
    for &ni in &params.n_i {
        let mut cuckoos = Vec::with_capacity(ni);
        let mut best = BestRecord { x: Vec::new(), fitness: R::infinity() };
        for _ in 0..ni {
            let x = uniform_point(ev.problem(), rng);
            let fitness = ev.eval(&x, rng)?;
            if fitness < best.fitness {
                best = BestRecord { x: x.clone(), fitness };
            }
            if fitness < overall_best.fitness {
                overall_best = BestRecord { x: x.clone(), fitness };
            }
            cuckoos.push(Cuckoo { x, fitness });
        }
        species.push(SpeciesPop { cuckoos, best });
    }

    let mut nests = Vec::with_capacity(params.w);
    let mut best_host = BestRecord { x: Vec::new(), fitness: R::infinity() };
    for _ in 0..params.w {
        let mut eggs = Vec::with_capacity(params.q);
        for _ in 0..params.q {
            let x = uniform_point(problem, rng);
            let fitness = ev.eval(&x, rng)?;
            if fitness < best_host.fitness {
                best_host = BestRecord { x: x.clone(), fitness };
            }
            if fitness < overall_best.fitness {
                overall_best = BestRecord { x: x.clone(), fitness };
            }
            eggs.push(Egg { x, fitness, owner: EggOwner::Host });
        }
        nests.push(Nest { eggs });
    }

    Ok(MscsState {
        species,
        nests,
        best_host,
        overall_best,
        iteration: 0,
    })
}

/// Cuckoo `i` of species `j` visits nest `k` and lays `r` eggs.
///
/// Each candidate is produced by the ungated local walk (pair drawn within
/// the species) when `eps < p_a`, otherwise by a Lévy flight anchored at the
/// overall best solution recorded so far and scaled per dimension by the
/// cuckoo's gap to it. A candidate that strictly beats the worst egg in the
/// nest replaces it and becomes cuckoo-owned; the cuckoo itself adopts the
/// candidate when it improves on its own fitness.
pub fn lay_egg<R: Scalar>(
    state: &mut MscsState<R>,
    species_j: usize,
    cuckoo_i: usize,
    nest_k: usize,
    params: &MscsParams,
    ev: &mut Evaluator<'_, R>,
    rng: &mut RngStream,
) -> Result<()> {
    let sampler = LevySampler::new(params.levy.lambda)?;
    for _ in 0..params.r {
        if ev.exhausted() {
            break;
        }
        let xi = state.species[species_j].cuckoos[cuckoo_i].x.clone();
        let eps = rng.next_f64();
        let cand = if eps < params.p_a {
            // Eq.-(1) walk with the Heaviside factor already decided by the
            // branch; pair drawn within the species when it is large enough
            let ni = state.species[species_j].cuckoos.len();
            match ni {
                0 | 1 => xi.clone(),
                2 => {
                    let flip = (rng.next_u64() & 1) as usize;
                    let (a, b) = (flip, 1 - flip);
                    local_walk_ungated(
                        &xi,
                        &state.species[species_j].cuckoos[a].x,
                        &state.species[species_j].cuckoos[b].x,
                        params.levy.beta,
                        rng,
                    )
                }
                _ => {
                    let (a, b) = distinct_random_pair(ni, cuckoo_i, rng)?;
                    local_walk_ungated(
                        &xi,
                        &state.species[species_j].cuckoos[a].x,
                        &state.species[species_j].cuckoos[b].x,
                        params.levy.beta,
                        rng,
                    )
                }
            }
        } else {
            // levy flight anchored at the recorded overall best, scaled per
            // dimension by the cuckoo's gap to it: distant cuckoos scatter
            // widely (exploration), nearby ones probe tightly (refinement),
            // and the heavy tail preserves occasional long jumps
            let anchor = state.overall_best.x.clone();
            let alpha_eff: Vec<R> = xi
                .iter()
                .zip(anchor.iter())
                .map(|(&v, &b)| v - b)
                .collect();
            levy_flight(&anchor, &alpha_eff, &sampler, rng)
        };
        let cand = clamp_and_snap(&cand, ev.problem());
        let fitness = ev.eval(&cand, rng)?;
        state.observe(&cand, fitness);

        let nest = &mut state.nests[nest_k];
        let worst = nest.worst_index();
        if fitness < nest.eggs[worst].fitness {
            nest.eggs[worst] = Egg {
                x: cand.clone(),
                fitness,
                owner: EggOwner::Cuckoo(species_j),
            };
        }

        let sp = &mut state.species[species_j];
        if fitness < sp.cuckoos[cuckoo_i].fitness {
            sp.cuckoos[cuckoo_i] = Cuckoo { x: cand.clone(), fitness };
            if fitness < sp.best.fitness {
                sp.best = BestRecord { x: cand, fitness };
            }
        }
    }
    Ok(())
}

/// Positional exchange between one cuckoo of each species, controlled by a
/// fresh binary mask: both swapped vectors are kept unconditionally.
pub fn species_swap<R: Scalar>(
    state: &mut MscsState<R>,
    species_a: usize,
    species_b: usize,
    ev: &mut Evaluator<'_, R>,
    rng: &mut RngStream,
) -> Result<()> {
    debug_assert_ne!(species_a, species_b);
    if !ev.has_budget(2) {
        return Ok(());
    }
    let ia = rng.below(state.species[species_a].cuckoos.len());
    let ib = rng.below(state.species[species_b].cuckoos.len());
    let dim = state.species[species_a].cuckoos[ia].x.len();
    let mask = random_binary_mask(dim, rng)?;
    let xa = state.species[species_a].cuckoos[ia].x.clone();
    let xb = state.species[species_b].cuckoos[ib].x.clone();
    let new_a: Vec<R> = (0..dim)
        .map(|d| if mask[d] == 1 { xb[d] } else { xa[d] })
        .collect();
    let new_b: Vec<R> = (0..dim)
        .map(|d| if mask[d] == 1 { xa[d] } else { xb[d] })
        .collect();

    let fa = ev.eval(&new_a, rng)?;
    state.observe(&new_a, fa);
    let fb = ev.eval(&new_b, rng)?;
    state.observe(&new_b, fb);

    let sp_a = &mut state.species[species_a];
    sp_a.cuckoos[ia] = Cuckoo { x: new_a.clone(), fitness: fa };
    if fa < sp_a.best.fitness {
        sp_a.best = BestRecord { x: new_a, fitness: fa };
    }
    let sp_b = &mut state.species[species_b];
    sp_b.cuckoos[ib] = Cuckoo { x: new_b.clone(), fitness: fb };
    if fb < sp_b.best.fitness {
        sp_b.best = BestRecord { x: new_b, fitness: fb };
    }
    Ok(())
}

/// Rebuild nest `k` when its cuckoo-owned fraction strictly exceeds
/// `1 - p_a`: all `q` eggs are re-drawn by Lévy flights (at a fixed fraction
/// of domain width) from the nest's best egg, becoming host-owned.
pub fn abandonment_check<R: Scalar>(
    state: &mut MscsState<R>,
    nest_k: usize,
    params: &MscsParams,
    ev: &mut Evaluator<'_, R>,
    rng: &mut RngStream,
) -> Result<()> {
    let frac = state.nests[nest_k].cuckoo_fraction();
    if !(frac > 1.0 - params.p_a) {
        return Ok(());
    }
    if !ev.has_budget(params.q as u64) {
        return Ok(());
    }
    let problem = ev.problem();
    let sampler = LevySampler::new(params.levy.lambda)?;
    let alpha_eff: Vec<R> = (0..problem.dim)
        .map(|d| R::of(params.levy.alpha) * (problem.upper[d] - problem.lower[d]))
        .collect();
    let origin = state.nests[nest_k].eggs[state.nests[nest_k].best_index()].x.clone();
    for slot in 0..params.q {
        let x = clamp_and_snap(&levy_flight(&origin, &alpha_eff, &sampler, rng), ev.problem());
        let fitness = ev.eval(&x, rng)?;
        state.observe(&x, fitness);
        if fitness < state.best_host.fitness {
            state.best_host = BestRecord { x: x.clone(), fitness };
        }
        state.nests[nest_k].eggs[slot] = Egg { x, fitness, owner: EggOwner::Host };
    }
    Ok(())
}

/// One full generation: `n` lay events, one swap per unordered species pair,
/// abandonment check on every nest, then elitism.
pub fn mscs_generation<R: Scalar>(
    state: &mut MscsState<R>,
    params: &MscsParams,
    ev: &mut Evaluator<'_, R>,
    rng: &mut RngStream,
) -> Result<()> {
    let n = params.total_cuckoos();
    for _ in 0..n {
        if ev.exhausted() {
            break;
        }
        // one draw picks (species, cuckoo) jointly: species weighted by n_i,
        // cuckoo uniform within it
        let mut pick = rng.below(n);
        let mut species_j = 0;
        for (j, &ni) in params.n_i.iter().enumerate() {
            if pick < ni {
                species_j = j;
                break;
            }
            pick -= ni;
        }
        let cuckoo_i = pick;
        let nest_k = rng.below(params.w);
        lay_egg(state, species_j, cuckoo_i, nest_k, params, ev, rng)?;
    }

    let m = params.species_count();
    for a in 0..m {
        for b in a + 1..m {
            if ev.exhausted() {
                break;
            }
            species_swap(state, a, b, ev, rng)?;
        }
    }

    for k in 0..params.w {
        if ev.exhausted() {
            break;
        }
        abandonment_check(state, k, params, ev, rng)?;
    }

    // elitism: re-assert each species' recorded best when no member matches
    for sp in state.species.iter_mut() {
        let best_member = sp
            .cuckoos
            .iter()
            .map(|c| c.fitness)
            .fold(R::infinity(), R::min);
        if best_member > sp.best.fitness {
            let mut worst = 0;
            for (i, c) in sp.cuckoos.iter().enumerate() {
                if c.fitness > sp.cuckoos[worst].fitness {
                    worst = i;
                }
            }
            sp.cuckoos[worst] = Cuckoo { x: sp.best.x.clone(), fitness: sp.best.fitness };
        }
    }
    // ... and the best recorded host egg
    let best_egg = state
        .nests
        .iter()
        .flat_map(|nest| nest.eggs.iter().map(|e| e.fitness))
        .fold(R::infinity(), R::min);
    if best_egg > state.best_host.fitness {
        let (mut wk, mut wi) = (0usize, 0usize);
        let mut worst = R::neg_infinity();
        for (k, nest) in state.nests.iter().enumerate() {
            for (i, e) in nest.eggs.iter().enumerate() {
                if e.fitness > worst {
                    worst = e.fitness;
                    wk = k;
                    wi = i;
                }
            }
        }
        state.nests[wk].eggs[wi] = Egg {
            x: state.best_host.x.clone(),
            fitness: state.best_host.fitness,
            owner: EggOwner::Host,
        };
    }

    state.iteration += 1;
    Ok(())
}

/// Run the multi-species search on one problem. Deterministic for a fixed
/// `(problem, params, seed)` triple.
pub fn mscs_run<R: Scalar>(
    problem: &ObjectiveProblem<R>,
    params: &MscsParams,
) -> Result<TrialResult<R>> {
    params.validate()?;
    problem.validate()?;
    let init_cost = (params.total_cuckoos() + params.w * params.q) as u64;
    if let Some(cap) = params.max_fe {
        if cap < init_cost {
            return Err(Error::ParameterDomain(format!(
                "max_fe {cap} below the initialization cost {init_cost}"
            )));
        }
    }
    let mut rng = RngStream::new(params.seed);
    let mut ev = Evaluator::new(problem, PenaltyConfig::default(), params.max_fe);
    let mut state = init_state(params, &mut ev, &mut rng)?;

    let mut trace = Vec::with_capacity(params.t_max);
    while state.iteration < params.t_max && !ev.exhausted() {
        mscs_generation(&mut state, params, &mut ev, &mut rng)?;
        trace.push(ev.best().1);
    }

    let (best_x, best_f) = ev.best();
    debug_assert_eq!(best_f, state.overall_best.fitness);
    let e_f = match problem.known_min {
        Some(m) => Some(crate::problem::error_metric(best_f, m)?.0),
        None => None,
    };
    Ok(TrialResult {
        best_x: best_x.to_vec(),
        best_f,
        e_f,
        trace,
        fe_used: ev.fe_used(),
    })
}
