#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace idr {

// The closed set of 27 first-level Scopus disciplines used throughout the
// toolkit. Order is fixed; indices are used directly in vectors and matrices.
enum class Discipline : std::uint8_t {
  MEDI,
  IMMU,
  BIOC,
  MULT,
  AGRI,
  PHARM,
  VETE,
  NEUR,
  CHEM,
  CHEME,
  ENVI,
  ENGR,
  NURS,
  CS,
  PHYS,
  MATER,
  SOCI,
  MATH,
  PSYC,
  HEAL,
  BUSI,
  ARTS,
  ECON,
  DECIS,
  DENT,
  ENERGY,
  EARTH,
};

inline constexpr std::size_t kDisciplineCount = 27;

enum class SubjectArea : std::uint8_t {
  HealthSciences,
  LifeSciences,
  PhysicalSciences,
  SocialSciences,
  Multidisciplinary,
};

constexpr std::size_t index_of(Discipline d) { return static_cast<std::size_t>(d); }

Discipline discipline_at(std::size_t index);

std::string_view abbreviation(Discipline d);
std::string_view full_name(Discipline d);
SubjectArea subject_area(Discipline d);
std::string_view subject_area_name(SubjectArea a);

// Abbreviation string -> code; case-sensitive match on the fixed table.
std::optional<Discipline> parse_discipline(std::string_view abbrev);

// Fixed-size membership mask over the 27 codes. Cheaper and easier to reason
// about than std::set<Discipline> in the inner loops.
class DisciplineSet {
 public:
  DisciplineSet() = default;

  void insert(Discipline d) { bits_ |= mask(d); }
  void erase(Discipline d) { bits_ &= ~mask(d); }
  bool contains(Discipline d) const { return (bits_ & mask(d)) != 0; }
  bool empty() const { return bits_ == 0; }
  std::size_t size() const;

  std::uint32_t raw() const { return bits_; }

  bool operator==(const DisciplineSet&) const = default;

  // Iterates member codes in enum order.
  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t i = 0; i < kDisciplineCount; ++i) {
      if (bits_ & (1u << i)) fn(discipline_at(i));
    }
  }

 private:
  static constexpr std::uint32_t mask(Discipline d) {
    return 1u << static_cast<std::uint32_t>(d);
  }
  std::uint32_t bits_ = 0;
};

// Full-counting histogram over the 27 disciplines.
struct DisciplineVector {
  std::array<std::uint32_t, kDisciplineCount> counts{};

  std::uint32_t& operator[](Discipline d) { return counts[index_of(d)]; }
  std::uint32_t operator[](Discipline d) const { return counts[index_of(d)]; }

  std::uint64_t total() const;
  std::size_t nonzero_count() const;
  bool operator==(const DisciplineVector&) const = default;
};

}  // namespace idr
