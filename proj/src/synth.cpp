#include "idr/synth.hpp"

#include <algorithm>
#include <sstream>

#include "idr/discipline.hpp"
#include "idr/records_io.hpp"
#include "idr/rng.hpp"

namespace idr {

namespace {

std::string primary_journal(Discipline d) {
  return "Journal of " + std::string(full_name(d));
}

std::string letters_journal(Discipline d) {
  return std::string(full_name(d)) + " Letters";
}

std::string journal_abbrev(Discipline d) {
  return "J " + std::string(abbreviation(d));
}

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string base_catalog_csv() {
  std::ostringstream out;
  out << "journal_title,codes\n";
  for (std::size_t i = 0; i < kDisciplineCount; ++i) {
    Discipline d = discipline_at(i);
    out << csv_quote(primary_journal(d)) << ',' << abbreviation(d) << '\n';
    out << csv_quote(letters_journal(d)) << ',' << abbreviation(d) << '\n';
  }
  out << "Cancer Cell,BIOC;MEDI\n";
  out << "Nature Machine Intelligence,CS\n";
  out << csv_quote("Proceedings of the National Academy of Sciences of the United States of America")
      << ",MULT\n";
  out << "Annals of Interdisciplinary Studies,MEDI;CS;SOCI\n";
  return out.str();
}

std::string base_abbrev_csv() {
  std::ostringstream out;
  out << "abbrev,full_name\n";
  for (std::size_t i = 0; i < kDisciplineCount; ++i) {
    Discipline d = discipline_at(i);
    out << csv_quote(journal_abbrev(d)) << ',' << csv_quote(primary_journal(d)) << '\n';
  }
  out << "PNAS,"
      << csv_quote("Proceedings of the National Academy of Sciences of the United States of America")
      << '\n';
  out << "Proc Natl Acad Sci USA,"
      << csv_quote("Proceedings of the National Academy of Sciences of the United States of America")
      << '\n';
  return out.str();
}

ReferenceRecord make_ref(std::string journal, int year, std::size_t n) {
  ReferenceRecord r;
  r.ref_id = "ref-" + std::to_string(n);
  r.journal_title = std::move(journal);
  r.year = year;
  r.doc_type = DocType::Article;
  return r;
}

std::string to_jsonl(const std::vector<PublicationRecord>& records) {
  std::ostringstream out;
  serialize_records(records, out);
  return out.str();
}

}  // namespace

SynthCorpus make_planted_trend_corpus(const PlantedTrendOptions& opts) {
  SplitMix64 rng(opts.seed);
  std::vector<PublicationRecord> records;

  std::size_t paper_no = 0;
  for (int t = 0; t < opts.periods; ++t) {
    std::size_t distinct =
        std::min(opts.base_disciplines + static_cast<std::size_t>(t) * opts.spread_step,
                 kDisciplineCount);
    for (std::size_t p = 0; p < opts.papers_per_period; ++p) {
      PublicationRecord rec;
      rec.id = "synth-" + std::to_string(paper_no++);
      rec.title = "Planted trend study " + std::to_string(paper_no);
      rec.journal_title = primary_journal(Discipline::MEDI);
      rec.year = opts.start_year + t;
      rec.month = 1 + static_cast<int>(rng.below(12));
      rec.doc_type = DocType::Article;

      std::size_t ref_no = 0;
      // One reference per planted discipline keeps the distinct-discipline
      // count exact.
      for (std::size_t k = 0; k < distinct; ++k) {
        rec.references.push_back(
            make_ref(primary_journal(discipline_at(k)), rec.year - 1, ref_no++));
      }
      for (std::size_t k = 0; k < opts.noise_refs; ++k) {
        std::size_t pick = rng.below(distinct);
        rec.references.push_back(
            make_ref(letters_journal(discipline_at(pick)), rec.year - 2, ref_no++));
      }
      for (std::uint32_t k = 0; k < opts.dominant_growth * static_cast<std::uint32_t>(t); ++k) {
        rec.references.push_back(
            make_ref(letters_journal(discipline_at(0)), rec.year - 1, ref_no++));
      }
      records.push_back(std::move(rec));
    }
  }

  return SynthCorpus{to_jsonl(records), base_catalog_csv(), base_abbrev_csv()};
}

SynthCorpus make_varied_corpus(const VariedCorpusOptions& opts) {
  SplitMix64 rng(opts.seed);
  std::vector<PublicationRecord> records;

  // Skewed discipline popularity, heaviest first.
  std::vector<std::size_t> pool;
  for (std::size_t i = 0; i < kDisciplineCount; ++i) {
    std::size_t weight = i < 3 ? 8 : (i < 10 ? 3 : 1);
    for (std::size_t k = 0; k < weight; ++k) pool.push_back(i);
  }

  const int years = opts.end_year - opts.start_year + 1;
  for (std::size_t p = 0; p < opts.papers; ++p) {
    PublicationRecord rec;
    rec.id = "paper-" + std::to_string(p);
    rec.year = opts.start_year + static_cast<int>(rng.below(static_cast<std::uint64_t>(years)));
    rec.month = 1 + static_cast<int>(rng.below(12));

    bool covid = rec.year == 2020 ? rng.real() < 0.7 : rng.real() < 0.2;
    rec.title = covid ? "COVID-19 response study " + std::to_string(p)
                      : "Coronavirus biology study " + std::to_string(p);
    if (rng.real() < 0.5) {
      rec.abstract = covid ? "We analyse 2019-nCoV outcomes in cohort " + std::to_string(p)
                           : "Longitudinal observations, cohort " + std::to_string(p);
    }

    double type_roll = rng.real();
    rec.doc_type =
        type_roll < 0.78 ? DocType::Article : (type_roll < 0.9 ? DocType::Review : DocType::Other);

    double journal_roll = rng.real();
    if (journal_roll < 0.05) {
      rec.journal_title = "Cancer Cell";
    } else if (journal_roll < 0.08) {
      rec.journal_title = "Nature Machine Intelligence";
    } else if (journal_roll < 0.12) {
      rec.journal_title = "Unlisted Preprint Server";  // citing journal unidentified
    } else {
      rec.journal_title = primary_journal(discipline_at(pool[rng.below(pool.size())]));
    }

    std::size_t ref_count = 2 + rng.below(18);
    for (std::size_t r = 0; r < ref_count; ++r) {
      Discipline d = discipline_at(pool[rng.below(pool.size())]);
      double roll = rng.real();
      std::string journal;
      if (roll < 0.62) {
        journal = primary_journal(d);
      } else if (roll < 0.74) {
        journal = journal_abbrev(d);  // resolved via the abbreviation map
      } else if (roll < 0.80) {
        journal = "PNAS";
      } else if (roll < 0.86) {
        journal = "Cancer Cell";
      } else if (roll < 0.94) {
        journal = "Obscure Regional Bulletin " + std::to_string(rng.below(40));
      } else {
        journal = "";  // reference without a journal title
      }
      rec.references.push_back(make_ref(std::move(journal), rec.year - 1 - static_cast<int>(rng.below(20)), r));
      if (rng.real() < 0.08) rec.references.back().doc_type = DocType::Other;
    }
    records.push_back(std::move(rec));
  }

  return SynthCorpus{to_jsonl(records), base_catalog_csv(), base_abbrev_csv()};
}

}  // namespace idr
