#!/usr/bin/env python3
"""Regenerate src/lidkit/_scriptdata.py from the Unicode script property.

Uses the third-party `regex` module (dev-time only) as the source of truth
for \\p{Script=...} and \\p{L}. The shipped table covers letter codepoints
only, mapped to ISO 15924 script codes, as (start, end, code) runs.

Run from the repo root: python tools/gen_script_table.py
"""

import sys
from pathlib import Path

import regex

# Unicode script property value -> ISO 15924 code.
SCRIPT_CODES = {
    "Adlam": "Adlm", "Ahom": "Ahom", "Anatolian_Hieroglyphs": "Hluw",
    "Arabic": "Arab", "Armenian": "Armn", "Avestan": "Avst",
    "Balinese": "Bali", "Bamum": "Bamu", "Bassa_Vah": "Bass",
    "Beria_Erfe": "Berf",
    "Batak": "Batk", "Bengali": "Beng", "Bhaiksuki": "Bhks",
    "Bopomofo": "Bopo", "Brahmi": "Brah", "Braille": "Brai",
    "Buginese": "Bugi", "Buhid": "Buhd", "Canadian_Aboriginal": "Cans",
    "Carian": "Cari", "Caucasian_Albanian": "Aghb", "Chakma": "Cakm",
    "Cham": "Cham", "Cherokee": "Cher", "Chorasmian": "Chrs",
    "Common": "Zyyy", "Coptic": "Copt", "Cuneiform": "Xsux",
    "Cypriot": "Cprt", "Cypro_Minoan": "Cpmn", "Cyrillic": "Cyrl",
    "Deseret": "Dsrt", "Devanagari": "Deva", "Dives_Akuru": "Diak",
    "Dogra": "Dogr", "Duployan": "Dupl", "Egyptian_Hieroglyphs": "Egyp",
    "Elbasan": "Elba", "Elymaic": "Elym", "Ethiopic": "Ethi",
    "Garay": "Gara", "Georgian": "Geor", "Glagolitic": "Glag",
    "Gothic": "Goth", "Grantha": "Gran", "Greek": "Grek",
    "Gujarati": "Gujr", "Gunjala_Gondi": "Gong", "Gurmukhi": "Guru",
    "Gurung_Khema": "Gukh", "Han": "Hani", "Hangul": "Hang",
    "Hanifi_Rohingya": "Rohg", "Hanunoo": "Hano", "Hatran": "Hatr",
    "Hebrew": "Hebr", "Hiragana": "Hira", "Imperial_Aramaic": "Armi",
    "Inherited": "Zinh", "Inscriptional_Pahlavi": "Phli",
    "Inscriptional_Parthian": "Prti", "Javanese": "Java",
    "Kaithi": "Kthi", "Kannada": "Knda", "Katakana": "Kana",
    "Kawi": "Kawi", "Kayah_Li": "Kali", "Kharoshthi": "Khar",
    "Khitan_Small_Script": "Kits", "Khmer": "Khmr", "Khojki": "Khoj",
    "Khudawadi": "Sind", "Kirat_Rai": "Krai", "Lao": "Laoo",
    "Latin": "Latn", "Lepcha": "Lepc", "Limbu": "Limb",
    "Linear_A": "Lina", "Linear_B": "Linb", "Lisu": "Lisu",
    "Lycian": "Lyci", "Lydian": "Lydi", "Mahajani": "Mahj",
    "Makasar": "Maka", "Malayalam": "Mlym", "Mandaic": "Mand",
    "Manichaean": "Mani", "Marchen": "Marc", "Masaram_Gondi": "Gonm",
    "Medefaidrin": "Medf", "Meetei_Mayek": "Mtei", "Mende_Kikakui": "Mend",
    "Meroitic_Cursive": "Merc", "Meroitic_Hieroglyphs": "Mero",
    "Miao": "Plrd", "Modi": "Modi", "Mongolian": "Mong", "Mro": "Mroo",
    "Multani": "Mult", "Myanmar": "Mymr", "Nabataean": "Nbat",
    "Nag_Mundari": "Nagm", "Nandinagari": "Nand", "New_Tai_Lue": "Talu",
    "Newa": "Newa", "Nko": "Nkoo", "Nushu": "Nshu",
    "Nyiakeng_Puachue_Hmong": "Hmnp", "Ogham": "Ogam", "Ol_Chiki": "Olck",
    "Ol_Onal": "Onao", "Old_Hungarian": "Hung", "Old_Italic": "Ital",
    "Old_North_Arabian": "Narb", "Old_Permic": "Perm",
    "Old_Persian": "Xpeo", "Old_Sogdian": "Sogo",
    "Old_South_Arabian": "Sarb", "Old_Turkic": "Orkh",
    "Old_Uyghur": "Ougr", "Oriya": "Orya", "Osage": "Osge",
    "Osmanya": "Osma", "Pahawh_Hmong": "Hmng", "Palmyrene": "Palm",
    "Pau_Cin_Hau": "Pauc", "Phags_Pa": "Phag", "Phoenician": "Phnx",
    "Psalter_Pahlavi": "Phlp", "Rejang": "Rjng", "Runic": "Runr",
    "Samaritan": "Samr", "Saurashtra": "Saur", "Sharada": "Shrd",
    "Shavian": "Shaw", "Siddham": "Sidd", "Sidetic": "Sidt",
    "SignWriting": "Sgnw",
    "Sinhala": "Sinh", "Sogdian": "Sogd", "Sora_Sompeng": "Sora",
    "Soyombo": "Soyo", "Sundanese": "Sund", "Sunuwar": "Sunu",
    "Syloti_Nagri": "Sylo", "Syriac": "Syrc", "Tagalog": "Tglg",
    "Tagbanwa": "Tagb", "Tai_Le": "Tale", "Tai_Tham": "Lana",
    "Tai_Viet": "Tavt", "Tai_Yo": "Tayo", "Takri": "Takr", "Tamil": "Taml",
    "Tangsa": "Tnsa", "Tangut": "Tang", "Telugu": "Telu",
    "Thaana": "Thaa", "Thai": "Thai", "Tibetan": "Tibt",
    "Tifinagh": "Tfng", "Tirhuta": "Tirh", "Todhri": "Todr",
    "Tolong_Siki": "Tols", "Toto": "Toto", "Tulu_Tigalari": "Tutg",
    "Ugaritic": "Ugar",
    "Unknown": "Zzzz", "Vai": "Vaii", "Vithkuqi": "Vith",
    "Wancho": "Wcho", "Warang_Citi": "Wara", "Yezidi": "Yezi",
    "Yi": "Yiii", "Zanabazar_Square": "Zanb",
}


def main() -> int:
    # Letters only; surrogates excluded (not letters, and regex rejects them).
    everything = "".join(
        chr(cp) for cp in range(0x110000) if not 0xD800 <= cp <= 0xDFFF
    )
    letters = "".join(regex.findall(r"\p{L}", everything))
    print(f"{len(letters)} letter codepoints", file=sys.stderr)

    assigned = {}
    for name, code in SCRIPT_CODES.items():
        for ch in regex.findall(rf"\p{{Script={name}}}", letters):
            assigned[ord(ch)] = code

    missing = [ord(ch) for ch in letters if ord(ch) not in assigned]
    if missing:
        sample = ", ".join(f"U+{cp:04X}" for cp in missing[:10])
        raise SystemExit(
            f"{len(missing)} letters not covered by SCRIPT_CODES ({sample}); "
            "add the missing script names"
        )

    runs = []
    for cp in sorted(assigned):
        code = assigned[cp]
        if runs and runs[-1][1] == cp - 1 and runs[-1][2] == code:
            runs[-1][1] = cp
        else:
            runs.append([cp, cp, code])
    print(f"{len(runs)} runs", file=sys.stderr)

    out = Path(__file__).resolve().parent.parent / "src" / "lidkit" / "_scriptdata.py"
    with out.open("w", encoding="utf-8") as f:
        f.write(
            '"""Unicode script property runs for letter codepoints.\n'
            "\n"
            "Generated by tools/gen_script_table.py from the Unicode Character\n"
            f"Database (via regex {regex.__version__}). Do not edit by hand.\n"
            "\n"
            "Each run is (first codepoint, last codepoint) inclusive, covering\n"
            "codepoints with general category Letter; the parallel list holds\n"
            "ISO 15924 script codes.\n"
            '"""\n\n'
        )
        f.write("RUN_STARTS = (\n")
        for i in range(0, len(runs), 10):
            f.write("    " + " ".join(f"{r[0]}," for r in runs[i : i + 10]) + "\n")
        f.write(")\n\nRUN_ENDS = (\n")
        for i in range(0, len(runs), 10):
            f.write("    " + " ".join(f"{r[1]}," for r in runs[i : i + 10]) + "\n")
        f.write(")\n\nRUN_SCRIPTS = (\n")
        for i in range(0, len(runs), 10):
            f.write(
                "    " + " ".join(f'"{r[2]}",' for r in runs[i : i + 10]) + "\n"
            )
        f.write(")\n")
    print(f"wrote {out}", file=sys.stderr)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
