use serde::{Deserialize, Serialize};

use super::{GroupError, Perm, PermGroup};

/// On-disk group description: a name, a degree and generator image lists
/// (0-based), stored as TOML.
///
/// ```toml
/// name = "S4"
/// degree = 4
/// generators = [[1, 0, 2, 3], [1, 2, 3, 0]]
/// ```
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupDescription {
    pub name: String,
    pub degree: usize,
    pub generators: Vec<Vec<u32>>,
}

impl GroupDescription {
    pub fn to_toml(&self) -> String {
        let gens: Vec<String> = self
            .generators
            .iter()
            .map(|g| {
                let parts: Vec<String> = g.iter().map(u32::to_string).collect();
                format!("  [{}],", parts.join(", "))
            })
            .collect();
        format!(
            "name = \"{}\"\ndegree = {}\ngenerators = [\n{}\n]\n",
            self.name,
            self.degree,
            gens.join("\n")
        )
    }

    pub fn from_group(g: &PermGroup) -> Self {
        GroupDescription {
            name: g.name().to_string(),
            degree: g.degree(),
            generators: g.generators().iter().map(|p| p.images().to_vec()).collect(),
        }
    }
}

pub fn parse_group_description(text: &str) -> Result<GroupDescription, GroupError> {
    toml::from_str(text).map_err(|e| GroupError::Parse(e.to_string()))
}

/// Validates the generators and enumerates the group.
pub fn load_group(desc: &GroupDescription, cap: usize) -> Result<PermGroup, GroupError> {
    let gens = desc
        .generators
        .iter()
        .map(|imgs| {
            if imgs.len() != desc.degree {
                return Err(GroupError::DegreeMismatch {
                    expected: desc.degree,
                    found: imgs.len(),
                });
            }
            Perm::new(imgs.clone())
        })
        .collect::<Result<Vec<_>, _>>()?;
    PermGroup::from_generators(desc.name.clone(), desc.degree, gens, cap)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::DEFAULT_CAP;

    #[test]
    fn load_examples() {
        let d8 = GroupDescription {
            name: "D8".into(),
            degree: 4,
            generators: vec![vec![1, 2, 3, 0], vec![2, 1, 0, 3]],
        };
        assert_eq!(load_group(&d8, DEFAULT_CAP).unwrap().order(), 8);
        let s4 = GroupDescription {
            name: "S4".into(),
            degree: 4,
            generators: vec![vec![1, 0, 2, 3], vec![1, 2, 3, 0]],
        };
        assert_eq!(load_group(&s4, DEFAULT_CAP).unwrap().order(), 24);
        let bad = GroupDescription {
            name: "bad".into(),
            degree: 3,
            generators: vec![vec![1, 0, 1]],
        };
        assert!(matches!(
            load_group(&bad, DEFAULT_CAP),
            Err(GroupError::NotBijective(_))
        ));
    }

    #[test]
    fn toml_round_trip() {
        let d = GroupDescription {
            name: "S3".into(),
            degree: 3,
            generators: vec![vec![1, 2, 0], vec![0, 2, 1]],
        };
        assert_eq!(parse_group_description(&d.to_toml()).unwrap(), d);
        assert!(parse_group_description("name = 3").is_err());
    }
}
