use serde::Serialize;

use super::{Color, EdgeRef, SbwSpec, Side};

/// The colour-preserving permutation of the `4n` square sides induced by a
/// corner pairing: a side ending at `v` is sent to the side of the same
/// colour that starts at `phi(v)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeBijection {
    images: Vec<EdgeRef>,
}

impl EdgeBijection {
    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    pub fn apply(&self, e: EdgeRef) -> EdgeRef {
        self.images[e.id()]
    }

    pub fn images(&self) -> &[EdgeRef] {
        &self.images
    }

    pub fn from_images(images: Vec<EdgeRef>) -> Self {
        EdgeBijection { images }
    }
}

pub fn induced_edge_bijection(spec: &SbwSpec) -> EdgeBijection {
    let images = spec
        .edges()
        .map(|e| {
            let start = spec.phi(e.terminal());
            EdgeRef::new(start.square, Side::leaving(start.corner, e.color()))
        })
        .collect();
    EdgeBijection { images }
}

/// Cycles of the edge bijection, split by colour. Each cycle starts at its
/// smallest side and the cycles of one colour are sorted by that side.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OrbitDecomposition {
    pub black: Vec<Vec<EdgeRef>>,
    pub white: Vec<Vec<EdgeRef>>,
}

impl OrbitDecomposition {
    pub fn count(&self) -> usize {
        self.black.len() + self.white.len()
    }

    pub fn of_color(&self, color: Color) -> &[Vec<EdgeRef>] {
        match color {
            Color::Black => &self.black,
            Color::White => &self.white,
        }
    }

    /// Every orbit, black ones first.
    pub fn iter(&self) -> impl Iterator<Item = (Color, &[EdgeRef])> {
        self.black
            .iter()
            .map(|o| (Color::Black, o.as_slice()))
            .chain(self.white.iter().map(|o| (Color::White, o.as_slice())))
    }

    pub fn sizes(&self, color: Color) -> Vec<usize> {
        let mut sizes: Vec<_> = self.of_color(color).iter().map(Vec::len).collect();
        sizes.sort_unstable();
        sizes
    }
}

pub fn orbit_decomposition(psi: &EdgeBijection) -> OrbitDecomposition {
    let mut seen = vec![false; psi.len()];
    let mut black = Vec::new();
    let mut white = Vec::new();
    for start in 0..psi.len() {
        if seen[start] {
            continue;
        }
        let first = EdgeRef::from_id(start);
        let mut orbit = Vec::new();
        let mut e = first;
        while !seen[e.id()] {
            seen[e.id()] = true;
            orbit.push(e);
            e = psi.apply(e);
        }
        debug_assert_eq!(e, first, "edge bijection is not a permutation");
        match first.color() {
            Color::Black => black.push(orbit),
            Color::White => white.push(orbit),
        }
    }
    OrbitDecomposition { black, white }
}

/// Per-component data of the closed surface assembled from the squares.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ComponentReport {
    pub squares: Vec<usize>,
    pub orbits: usize,
    pub euler: i64,
    pub genus: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CriterionReport {
    pub n: usize,
    pub orbits: usize,
    pub black_orbits: usize,
    pub white_orbits: usize,
    /// Whether the orbit count equals `n + 2`.
    pub orbit_identity: bool,
    pub connected: bool,
    /// The orbit identity on a connected configuration.
    pub verdict: bool,
    pub euler_m: i64,
    /// Total genus over all components.
    pub genus: usize,
    pub components: Vec<ComponentReport>,
}

impl CriterionReport {
    pub fn summary_line(&self) -> String {
        format!(
            "orbits={} n={} verdict={} chi_M={} genus={}",
            self.orbits,
            self.n,
            if self.verdict { "yes" } else { "no" },
            self.euler_m,
            self.genus
        )
    }
}

pub fn criterion_check(spec: &SbwSpec) -> CriterionReport {
    let psi = induced_edge_bijection(spec);
    let orbits = orbit_decomposition(&psi);
    let n = spec.n();
    let count = orbits.count();

    let groups = spec.square_components();
    let mut component_of = vec![0; n + 1];
    for (i, g) in groups.iter().enumerate() {
        for &sq in g {
            component_of[sq] = i;
        }
    }
    let mut per_component = vec![0usize; groups.len()];
    for (_, orbit) in orbits.iter() {
        per_component[component_of[orbit[0].square]] += 1;
    }
    let components: Vec<_> = groups
        .into_iter()
        .zip(per_component)
        .map(|(squares, orbits)| {
            let euler = orbits as i64 - squares.len() as i64;
            let genus =
                usize::try_from((2 - euler) / 2).expect("component euler characteristic exceeds 2");
            ComponentReport {
                squares,
                orbits,
                euler,
                genus,
            }
        })
        .collect();

    let connected = components.len() == 1;
    let orbit_identity = count == n + 2;
    CriterionReport {
        n,
        orbits: count,
        black_orbits: orbits.black.len(),
        white_orbits: orbits.white.len(),
        orbit_identity,
        connected,
        verdict: orbit_identity && connected,
        euler_m: count as i64 - n as i64,
        genus: components.iter().map(|c| c.genus).sum(),
        components,
    }
}
