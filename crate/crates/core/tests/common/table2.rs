//! Isomers with a pentagon cluster of size at least 7, by partition and
//! point group, as `n:id` spiral ids.

pub const TABLE2: &[(&str, &[(&str, &[&str])])] = &[
    (
        "12",
        &[
            ("C1", &["36:7", "38:7", "38:11", "38:14", "40:34", "42:37"]),
            (
                "C2",
                &[
                    "32:1", "32:4", "34:1", "34:4", "34:5", "36:10", "36:11", "36:12", "38:17", "40:11", "40:23", "40:35",
                    "40:36", "42:38", "42:43", "44:66", "44:81", "46:113",
                ],
            ),
            ("Cs", &["34:3"]),
            ("D2", &["28:1", "36:5", "44:85"]),
            ("C2v", &["30:2", "30:3", "38:12"]),
            ("D3", &["32:6"]),
            ("C3v", &["34:6"]),
            ("D2d", &["36:14"]),
            ("D3h", &["26:1", "32:5"]),
            ("D3d", &["44:86"]),
            ("D6d", &["24:1", "48:186"]),
            ("Td", &["28:2"]),
            ("Ih", &["20:1"]),
        ],
    ),
    ("11,1", &[("Cs", &["40:28", "42:42"])]),
    ("10,2", &[("C2v", &["40:37"])]),
    ("10,1,1", &[("D5d", &["40:39"])]),
    ("9,3", &[("Cs", &["44:71"]), ("C3v", &["38:16"])]),
    (
        "8,4",
        &[
            ("C1", &["38:8", "42:15", "42:36", "46:58", "48:60", "48:86"]),
            ("C2", &["40:15", "40:18", "44:76", "48:46", "48:63", "48:170", "52:83"]),
            ("Cs", &["46:28", "46:57"]),
            ("C2v", &["36:9"]),
        ],
    ),
    (
        "7,5",
        &[
            (
                "C1",
                &[
                    "36:3", "38:3", "38:4", "38:5", "40:4", "40:6", "40:12", "40:26", "42:2", "42:4", "42:10", "42:25",
                    "42:29", "42:30", "42:44", "44:9", "44:10", "44:18", "44:41", "44:42", "44:48", "46:6", "46:15",
                    "46:17", "46:45", "46:71", "46:105", "48:10", "48:20", "48:181", "48:182", "50:10", "50:12",
                    "50:139", "50:140", "50:141", "50:142", "50:232", "50:235", "52:9", "52:117", "52:118", "52:183",
                    "52:196", "54:32", "54:33", "54:134", "56:58", "56:295", "58:17", "58:18", "60:30",
                ],
            ),
            (
                "Cs",
                &[
                    "34:2", "36:4", "36:8", "40:7", "40:13", "40:24", "42:12", "44:11", "44:84", "46:8", "48:75", "50:33",
                    "54:19", "54:474", "58:240", "60:90", "64:53",
                ],
            ),
        ],
    ),
    (
        "7,4,1",
        &[
            ("C1", &["44:51", "46:27", "46:29", "46:30", "46:59", "48:106", "50:50", "52:166"]),
            ("Cs", &["44:28", "44:54", "46:41", "54:101"]),
        ],
    ),
    ("7,3,2", &[("Cs", &["48:141"])]),
];

/// `(partition, group, id)` for every entry of the table.
pub fn entries() -> Vec<(&'static str, &'static str, &'static str)> {
    TABLE2
        .iter()
        .flat_map(|(pip, groups)| groups.iter().flat_map(move |(g, ids)| ids.iter().map(move |id| (*pip, *g, *id))))
        .collect()
}
