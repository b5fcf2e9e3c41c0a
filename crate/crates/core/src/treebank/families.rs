//! Language to family lookup for the languages of the UD, PUD and HamleDT
//! collections.

const FAMILIES: &[(&str, &[&str])] = &[
    ("Afro-Asiatic", &["Akkadian", "Amharic", "Arabic", "Assyrian", "Coptic", "Hebrew", "Maltese"]),
    ("Altaic", &["Kazakh", "Turkish", "Uyghur"]),
    ("Austro-Asiatic", &["Vietnamese"]),
    ("Austronesian", &["Indonesian", "Tagalog"]),
    ("Basque", &["Basque"]),
    ("Dravidian", &["Tamil", "Telugu"]),
    (
        "Indo-European",
        &[
            "Afrikaans",
            "Albanian",
            "Ancient Greek",
            "Armenian",
            "Belarusian",
            "Bengali",
            "Bhojpuri",
            "Breton",
            "Bulgarian",
            "Catalan",
            "Croatian",
            "Czech",
            "Danish",
            "Dutch",
            "English",
            "Faroese",
            "French",
            "Galician",
            "German",
            "Gothic",
            "Greek",
            "Hindi",
            "Hindi-English",
            "Icelandic",
            "Irish",
            "Italian",
            "Kurmanji",
            "Latin",
            "Latvian",
            "Lithuanian",
            "Marathi",
            "Norwegian",
            "Old Church Slavonic",
            "Old French",
            "Old Russian",
            "Persian",
            "Polish",
            "Portuguese",
            "Romanian",
            "Russian",
            "Sanskrit",
            "Scottish Gaelic",
            "Serbian",
            "Slovak",
            "Slovenian",
            "Spanish",
            "Swedish",
            "Swiss German",
            "Ukrainian",
            "Upper Sorbian",
            "Urdu",
            "Welsh",
        ],
    ),
    ("Japanese", &["Japanese"]),
    ("Korean", &["Korean"]),
    ("Mande", &["Bambara"]),
    ("Mongolic", &["Buryat"]),
    ("Niger-Congo", &["Wolof", "Yoruba"]),
    ("Other", &["Naija"]),
    ("Pama-Nyungan", &["Warlpiri"]),
    ("Sign Language", &["Swedish Sign Language"]),
    ("Sino-Tibetan", &["Cantonese", "Chinese", "Classical Chinese"]),
    ("Tai-Kadai", &["Thai"]),
    ("Tupian", &["Mbya Guarani"]),
    (
        "Uralic",
        &[
            "Erzya",
            "Estonian",
            "Finnish",
            "Hungarian",
            "Karelian",
            "Komi-Permyak",
            "Komi-Zyrian",
            "Livvi",
            "Moksha",
            "North Sami",
            "Skolt Sami",
        ],
    ),
];

/// Family of a language, matched case-insensitively; `None` if unknown.
pub fn family_of(language: &str) -> Option<&'static str> {
    FAMILIES.iter().find(|(_, langs)| langs.iter().any(|l| l.eq_ignore_ascii_case(language))).map(|(family, _)| *family)
}

/// All family names, in table order.
pub fn families() -> impl Iterator<Item = &'static str> {
    FAMILIES.iter().map(|(f, _)| *f)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lookup() {
        assert_eq!(family_of("English"), Some("Indo-European"));
        assert_eq!(family_of("korean"), Some("Korean"));
        assert_eq!(family_of("Bengali"), Some("Indo-European"));
        assert_eq!(family_of("Klingon"), None);
        assert_eq!(families().count(), 19);
        let languages: usize = FAMILIES.iter().map(|(_, l)| l.len()).sum();
        // 92 UD languages plus Bengali from HamleDT
        assert_eq!(languages, 93);
    }
}
