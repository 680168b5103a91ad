use std::collections::BTreeMap;
use std::sync::Arc;

use super::chart::{Chart, Variable};
use super::poly::GradedPoly;
use crate::error::{Error, Result};

/// Parity-consistent assignment `variable -> polynomial`; unassigned
/// variables map to themselves.
#[derive(Clone, Debug, PartialEq)]
pub struct SubstitutionMap {
    chart: Arc<Chart>,
    assignments: BTreeMap<Variable, GradedPoly>,
}

impl SubstitutionMap {
    pub fn identity(chart: &Arc<Chart>) -> Self {
        SubstitutionMap {
            chart: chart.clone(),
            assignments: BTreeMap::new(),
        }
    }

    pub fn new<I>(chart: &Arc<Chart>, pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Variable, GradedPoly)>,
    {
        let mut map = Self::identity(chart);
        for (v, p) in pairs {
            map.assign(v, p)?;
        }
        Ok(map)
    }

    pub fn assign(&mut self, v: Variable, image: GradedPoly) -> Result<()> {
        if **image.chart() != *self.chart {
            return Err(Error::ChartMismatch(
                self.chart.name().to_string(),
                image.chart().name().to_string(),
            ));
        }
        if !image.is_homogeneous_of(v.parity()) {
            return Err(Error::ParityMismatch {
                var: self.chart.var_name(v),
                expected: v.parity(),
                found: image
                    .parity_of()
                    .map_or_else(|| "mixed".to_string(), |p| p.to_string()),
            });
        }
        self.assignments.insert(v, image);
        Ok(())
    }

    pub fn chart(&self) -> &Arc<Chart> {
        &self.chart
    }

    pub fn is_empty(&self) -> bool {
        self.assignments.is_empty()
    }

    pub fn get(&self, v: Variable) -> Option<&GradedPoly> {
        self.assignments.get(&v)
    }

    pub fn image(&self, v: Variable) -> GradedPoly {
        self.assignments
            .get(&v)
            .cloned()
            .unwrap_or_else(|| GradedPoly::var(&self.chart, v))
    }

    pub fn assignments(&self) -> impl Iterator<Item = (&Variable, &GradedPoly)> {
        self.assignments.iter()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graded::Chart;

    #[test]
    fn examples() {
        let c = Arc::new(Chart::standard(2, 0));
        let d12 = GradedPoly::product(&c, &[c.fiber(0), c.fiber(1)]);
        assert_eq!(d12.substitute(&SubstitutionMap::identity(&c)).unwrap(), d12);

        let xs1 = GradedPoly::var(&c, c.antifiber(0));
        let xs2 = GradedPoly::var(&c, c.antifiber(1));
        let s = SubstitutionMap::new(&c, [(c.fiber(0), xs2.clone())]).unwrap();
        let expected = &xs2 * &GradedPoly::var(&c, c.fiber(1));
        assert_eq!(d12.substitute(&s).unwrap(), expected);

        let s = SubstitutionMap::new(&c, [(c.fiber(0), xs2.clone()), (c.fiber(1), -xs1.clone())])
            .unwrap();
        assert_eq!(d12.substitute(&s).unwrap(), -(&xs2 * &xs1));
    }

    #[test]
    fn parity_inconsistent_assignment_is_rejected() {
        let c = Arc::new(Chart::standard(2, 0));
        let x1 = GradedPoly::var(&c, c.base(0));
        let err = SubstitutionMap::new(&c, [(c.fiber(0), x1)]).unwrap_err();
        assert!(matches!(err, Error::ParityMismatch { .. }));
    }
}
