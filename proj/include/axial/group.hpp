#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "axial/errors.hpp"

namespace axial {

enum class Family { FreeGroup, FreeAbelian, CyclicTimesFinite, DirectProduct };

class GroupModel;
using ModelPtr = std::shared_ptr<const GroupModel>;

// Immutable description of a supported group family. Every element of such a
// group has a unique normal form, so the word problem is solved by comparing
// payloads.
class GroupModel {
 public:
  Family family = Family::FreeGroup;
  int rank = 0;           // FreeGroup / FreeAbelian
  int finite_order = 1;   // CyclicTimesFinite
  std::vector<ModelPtr> factors;     // DirectProduct
  std::vector<std::string> labels;   // one label per generator

  static ModelPtr free_group(int rank);
  static ModelPtr free_abelian(int rank);
  static ModelPtr cyclic_times_finite(int order);
  static ModelPtr direct_product(std::vector<ModelPtr> parts);

  int generator_count() const;
  bool same_as(const GroupModel& other) const;
};

// Group element in normal form. The payload layout depends on the family:
//   FreeGroup         reduced word, letter i as +-(i+1)
//   FreeAbelian       exponent vector, one entry per generator
//   CyclicTimesFinite [z, r] with r in [0, order)
//   DirectProduct     per factor: [payload_size, payload...]
struct GroupElement {
  ModelPtr model;
  std::vector<int32_t> word;
  int32_t len = 0;
};

GroupElement identity(const ModelPtr& model);
GroupElement generator(const ModelPtr& model, int index, bool inverse = false);
GroupElement multiply(const GroupElement& x, const GroupElement& y);
GroupElement invert(const GroupElement& x);

bool is_identity(const GroupElement& x);
bool equal(const GroupElement& x, const GroupElement& y);
// Shortlex: length first, then letter order a < a^-1 < b < b^-1 for free
// groups, plain lexicographic payload order elsewhere.
bool shortlex_less(const GroupElement& x, const GroupElement& y);
std::size_t hash_value(const GroupElement& x);

struct ElementHash {
  std::size_t operator()(const GroupElement& x) const { return hash_value(x); }
};
struct ElementEq {
  bool operator()(const GroupElement& x, const GroupElement& y) const {
    return equal(x, y);
  }
};

// Word input: whitespace-separated tokens, lowercase = generator, uppercase =
// its inverse, optional ^k exponent ("a b A", "a^3 B").
GroupElement parse_word(const std::string& text, const ModelPtr& model);
GroupElement normal_form(const std::vector<std::string>& symbols,
                         const ModelPtr& model);
std::string to_string(const GroupElement& x);

GroupElement power(const GroupElement& x, long n);

// All elements of word length <= radius, sorted shortlex, each exactly once.
std::vector<GroupElement> ball(const ModelPtr& model, int radius,
                               std::size_t capacity = 1'000'000);

// Memoized balls for one model; fill is single-threaded, lookups are
// read-only afterwards and safe to share across parallel sweeps.
class BallCache {
 public:
  explicit BallCache(ModelPtr model, std::size_t capacity = 1'000'000)
      : model_(std::move(model)), capacity_(capacity) {}

  const std::vector<GroupElement>& get(int radius);
  const ModelPtr& model() const { return model_; }

 private:
  ModelPtr model_;
  std::size_t capacity_;
  std::map<int, std::vector<GroupElement>> balls_;
};

}  // namespace axial
