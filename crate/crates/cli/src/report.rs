//! Full analysis of a single algebra or Dyck path.

use std::fmt::Write as _;

use nakayama::bijections::{linear_to_dyck, m1_characterizations, m1_to_dyck, sincere_to_dyck};
use nakayama::cartan::{even_pdim_simple_count, magnitude, CartanMatrix};
use nakayama::resolution_quiver::cycle_report;
use nakayama::{
    CycleReport, DyckPath, Error, HomDim, Kind, KupischSeries, RationalJson, SeriesClass, Uniserial,
};
use serde::Serialize;

#[derive(Debug, Serialize)]
pub struct PathSummary {
    /// Which bijection produced the path: `linear`, `sincere` or `m1`.
    pub map: &'static str,
    pub path: DyckPath,
    pub area: Vec<usize>,
    pub height: usize,
    pub bounce: Vec<usize>,
    pub bounce_count: usize,
}

impl PathSummary {
    fn new(map: &'static str, path: DyckPath) -> Self {
        let bounce = path.bounce();
        PathSummary {
            map,
            area: path.area_sequence(),
            height: path.height(),
            bounce: bounce.points,
            bounce_count: bounce.count,
            path,
        }
    }
}

#[derive(Debug, Serialize)]
pub struct AnalysisReport {
    pub series: KupischSeries,
    pub class: SeriesClass,
    pub simples: usize,
    pub dimension: usize,
    pub loewy_length: usize,
    pub gldim: HomDim,
    pub simple_pdims: Vec<HomDim>,
    pub cartan: CartanMatrix,
    pub cartan_determinant: i128,
    /// `null` when the Cartan matrix is singular.
    pub magnitude: Option<RationalJson>,
    /// `null` when the global dimension is infinite.
    pub even_pdim_simples: Option<usize>,
    pub cokupisch: Vec<usize>,
    pub opposite: KupischSeries,
    pub injectives: Vec<Uniserial>,
    pub sincere: bool,
    pub magnitude_one: bool,
    /// `null` for linear algebras.
    pub resolution_quiver: Option<CycleReport>,
    /// Every path associated with the algebra by one of the bijections.
    pub dyck: Vec<PathSummary>,
}

impl AnalysisReport {
    pub fn new(a: &KupischSeries) -> Result<Self, Error> {
        let cartan = CartanMatrix::of(a);
        let cartan_determinant = cartan.determinant()?;
        let magnitude = match magnitude(a) {
            Ok(m) => Some(m.into()),
            Err(Error::SingularMatrix) => None,
            Err(e) => return Err(e),
        };
        let gldim = a.global_dimension();
        let injectives = (0..a.len()).map(|i| a.injective(i)).collect::<Result<_, _>>()?;
        let resolution_quiver = match a.kind() {
            Kind::Cyclic => Some(cycle_report(a)?),
            Kind::Linear => None,
        };
        let mut dyck = Vec::new();
        if a.class() == SeriesClass::ConnectedLinear {
            dyck.push(PathSummary::new("linear", linear_to_dyck(a)?));
        }
        if let Ok(p) = sincere_to_dyck(a) {
            dyck.push(PathSummary::new("sincere", p));
        }
        let magnitude_one = gldim.is_finite() && m1_characterizations(a)[0];
        if magnitude_one {
            if let Ok(p) = m1_to_dyck(a) {
                dyck.push(PathSummary::new("m1", p));
            }
        }
        Ok(AnalysisReport {
            series: a.clone(),
            class: a.class(),
            simples: a.len(),
            dimension: a.dimension(),
            loewy_length: a.loewy_length(),
            gldim,
            simple_pdims: a.simple_projective_dimensions(),
            cartan,
            cartan_determinant,
            magnitude,
            even_pdim_simples: even_pdim_simple_count(a).ok(),
            cokupisch: a.cokupisch(),
            opposite: a.opposite(),
            injectives,
            sincere: a.is_sincere(),
            magnitude_one,
            resolution_quiver,
            dyck,
        })
    }

    pub fn human(&self) -> String {
        let mut s = String::new();
        let list = |v: &[HomDim]| v.iter().map(|d| d.to_string()).collect::<Vec<_>>().join(", ");
        let _ = writeln!(s, "series:             {}", self.series);
        let _ = writeln!(s, "class:              {}", self.class);
        let _ = writeln!(s, "simples:            {}", self.simples);
        let _ = writeln!(s, "dimension:          {}", self.dimension);
        let _ = writeln!(s, "Loewy length:       {}", self.loewy_length);
        let _ = writeln!(s, "global dimension:   {}", self.gldim);
        let _ = writeln!(s, "pdim of simples:    [{}]", list(&self.simple_pdims));
        let _ = writeln!(s, "Cartan matrix:");
        for row in self.cartan.rows() {
            let cells: Vec<String> = row.iter().map(|x| format!("{x:>3}")).collect();
            let _ = writeln!(s, "  {}", cells.join(""));
        }
        let _ = writeln!(s, "Cartan determinant: {}", self.cartan_determinant);
        match self.magnitude {
            Some(m) if m.den == 1 => {
                let _ = writeln!(s, "magnitude:          {}", m.num);
            }
            Some(m) => {
                let _ = writeln!(s, "magnitude:          {}/{}", m.num, m.den);
            }
            None => {
                let _ = writeln!(s, "magnitude:          undefined (singular Cartan matrix)");
            }
        }
        if let Some(e) = self.even_pdim_simples {
            let _ = writeln!(s, "even-pdim simples:  {e}");
        }
        let _ = writeln!(s, "coKupisch series:   {:?}", self.cokupisch);
        let _ = writeln!(s, "opposite algebra:   {}", self.opposite);
        let injectives: Vec<String> = self.injectives.iter().map(|m| m.to_string()).collect();
        let _ = writeln!(s, "injectives:         {}", injectives.join(" "));
        let _ = writeln!(s, "sincere:            {}", self.sincere);
        let _ = writeln!(s, "magnitude one:      {}", self.magnitude_one);
        if let Some(q) = &self.resolution_quiver {
            let _ = writeln!(s, "resolution quiver:  successors {:?}, {} component(s)", q.successors, q.components);
            for c in &q.cycles {
                let _ = writeln!(s, "  cycle {:?} weight {}", c.vertices, c.weight);
            }
        }
        for p in &self.dyck {
            let _ = writeln!(
                s,
                "{} path:{:width$}{} area {:?} height {} bounce {:?}",
                p.map,
                "",
                p.path,
                p.area,
                p.height,
                p.bounce,
                width = 14 - p.map.len()
            );
        }
        s
    }
}

#[derive(Debug, Serialize)]
pub struct PathReport {
    pub path: DyckPath,
    pub semilength: usize,
    pub area: Vec<usize>,
    pub height: usize,
    pub bounce: Vec<usize>,
    pub bounce_count: usize,
    pub prime_factors: Vec<DyckPath>,
    /// Partner algebras under the three bijections; `null` where undefined.
    pub linear: KupischSeries,
    pub sincere: Option<KupischSeries>,
    pub m1: Option<KupischSeries>,
}

impl PathReport {
    pub fn new(d: &DyckPath) -> Self {
        let bounce = d.bounce();
        PathReport {
            path: d.clone(),
            semilength: d.semilength(),
            area: d.area_sequence(),
            height: d.height(),
            bounce: bounce.points,
            bounce_count: bounce.count,
            prime_factors: d.prime_factors(),
            linear: nakayama::bijections::dyck_to_linear(d),
            sincere: nakayama::bijections::dyck_to_sincere(d).ok(),
            m1: nakayama::bijections::dyck_to_m1(d).ok(),
        }
    }

    pub fn human(&self) -> String {
        let mut s = String::new();
        let opt = |a: &Option<KupischSeries>| a.as_ref().map_or("none".to_string(), |a| a.to_string());
        let factors: Vec<String> = self.prime_factors.iter().map(|p| p.to_string()).collect();
        let _ = writeln!(s, "path:               {}", self.path);
        let _ = writeln!(s, "semilength:         {}", self.semilength);
        let _ = writeln!(s, "area sequence:      {:?}", self.area);
        let _ = writeln!(s, "height:             {}", self.height);
        let _ = writeln!(s, "bounce points:      {:?}", self.bounce);
        let _ = writeln!(s, "bounce count:       {}", self.bounce_count);
        let _ = writeln!(s, "prime factors:      {}", factors.join(" "));
        let _ = writeln!(s, "linear algebra:     {}", self.linear);
        let _ = writeln!(s, "sincere algebra:    {}", opt(&self.sincere));
        let _ = writeln!(s, "magnitude-one:      {}", opt(&self.m1));
        s
    }
}
