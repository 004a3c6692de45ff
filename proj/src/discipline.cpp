#include "idr/discipline.hpp"

#include <stdexcept>

namespace idr {

namespace {

struct DisciplineInfo {
  std::string_view abbrev;
  std::string_view name;
  SubjectArea area;
};

constexpr std::array<DisciplineInfo, kDisciplineCount> kTable = {{
    {"MEDI", "Medicine", SubjectArea::HealthSciences},
    {"IMMU", "Immunology and Microbiology", SubjectArea::LifeSciences},
    {"BIOC", "Biochemistry, Genetics and Molecular Biology", SubjectArea::LifeSciences},
    {"MULT", "Multidisciplinary", SubjectArea::Multidisciplinary},
    {"AGRI", "Agricultural and Biological Sciences", SubjectArea::LifeSciences},
    {"PHARM", "Pharmacology, Toxicology and Pharmaceutics", SubjectArea::LifeSciences},
    {"VETE", "Veterinary", SubjectArea::HealthSciences},
    {"NEUR", "Neuroscience", SubjectArea::LifeSciences},
    {"CHEM", "Chemistry", SubjectArea::PhysicalSciences},
    {"CHEME", "Chemical Engineering", SubjectArea::PhysicalSciences},
    {"ENVI", "Environmental Science", SubjectArea::PhysicalSciences},
    {"ENGR", "Engineering", SubjectArea::PhysicalSciences},
    {"NURS", "Nursing", SubjectArea::HealthSciences},
    {"CS", "Computer Science", SubjectArea::PhysicalSciences},
    {"PHYS", "Physics and Astronomy", SubjectArea::PhysicalSciences},
    {"MATER", "Materials Science", SubjectArea::PhysicalSciences},
    {"SOCI", "Social Sciences", SubjectArea::SocialSciences},
    {"MATH", "Mathematics", SubjectArea::PhysicalSciences},
    {"PSYC", "Psychology", SubjectArea::SocialSciences},
    {"HEAL", "Health Professions", SubjectArea::HealthSciences},
    {"BUSI", "Business, Management and Accounting", SubjectArea::SocialSciences},
    {"ARTS", "Arts and Humanities", SubjectArea::SocialSciences},
    {"ECON", "Economics, Econometrics and Finance", SubjectArea::SocialSciences},
    {"DECIS", "Decision Sciences", SubjectArea::SocialSciences},
    {"DENT", "Dentistry", SubjectArea::HealthSciences},
    {"ENERGY", "Energy", SubjectArea::PhysicalSciences},
    {"EARTH", "Earth and Planetary Sciences", SubjectArea::PhysicalSciences},
}};

}  // namespace

Discipline discipline_at(std::size_t index) {
  if (index >= kDisciplineCount) throw std::out_of_range("discipline index out of range");
  return static_cast<Discipline>(index);
}

std::string_view abbreviation(Discipline d) { return kTable[index_of(d)].abbrev; }
std::string_view full_name(Discipline d) { return kTable[index_of(d)].name; }
SubjectArea subject_area(Discipline d) { return kTable[index_of(d)].area; }

std::string_view subject_area_name(SubjectArea a) {
  switch (a) {
    case SubjectArea::HealthSciences: return "Health Sciences";
    case SubjectArea::LifeSciences: return "Life Sciences";
    case SubjectArea::PhysicalSciences: return "Physical Sciences";
    case SubjectArea::SocialSciences: return "Social Sciences";
    case SubjectArea::Multidisciplinary: return "Multidisciplinary";
  }
  return "";
}

std::optional<Discipline> parse_discipline(std::string_view abbrev) {
  for (std::size_t i = 0; i < kDisciplineCount; ++i) {
    if (kTable[i].abbrev == abbrev) return discipline_at(i);
  }
  return std::nullopt;
}

std::size_t DisciplineSet::size() const {
  std::size_t n = 0;
  for (std::size_t i = 0; i < kDisciplineCount; ++i) {
    if (bits_ & (1u << i)) ++n;
  }
  return n;
}

std::uint64_t DisciplineVector::total() const {
  std::uint64_t sum = 0;
  for (auto c : counts) sum += c;
  return sum;
}

std::size_t DisciplineVector::nonzero_count() const {
  std::size_t n = 0;
  for (auto c : counts) {
    if (c != 0) ++n;
  }
  return n;
}

}  // namespace idr
