#pragma once

#include "wonderful/locus.hpp"

#include <span>
#include <vector>

namespace wonderful {

/// Ambient: subvarieties of X^n. SecondStage: proper transforms of diagonals
/// inside X_D^[n]. Transforms of diagonals intersect as the transform of the
/// meet of their partitions, so their calculus is the ambient diagonal one.
enum class Stage { Ambient, SecondStage };

struct BuildingSet {
    GeometryConfig geometry;
    std::vector<Center> members;
    Stage stage = Stage::Ambient;
};

struct StagedBuildingSets {
    BuildingSet first_stage;   // all D_{c,S}, empty for FM
    BuildingSet second_stage;  // all Δ_I with |I| >= 2, empty for X_D^[n]
};

StagedBuildingSets building_set_for(const GeometryConfig& g);

/// Conventions for the universal family over n+1 points.
///
/// By default D_{c,{n+1}} (the T = ∅ case) is kept only as a boundary label
/// and diagonal centers Δ_{I+} use |I| >= 2. Both can be switched on.
struct UniversalFamilyOptions {
    bool empty_t_as_center = false;
    bool singleton_diagonals = false;
};

struct UniversalFamily {
    GeometryConfig geometry;              // population n+1
    std::vector<Center> d_centers;        // D_{c,T+}, inclusion order
    std::vector<Center> diagonal_centers; // Δ_{I+}, inclusion order
    std::vector<Center> sections;         // Δ_{{i}+}, i = 1..n
    std::vector<Center> boundary_labels;  // D_{c,{n+1}} when not used as centers

    /// d_centers followed by diagonal_centers.
    std::vector<Center> centers() const;
};

UniversalFamily universal_family_centers(const GeometryConfig& g, UniversalFamilyOptions opts = {});

/// Every distinct nonempty intersection of a nonempty subfamily, sorted.
std::vector<Locus> intersection_closure(std::span<const Locus> loci, const GeometryConfig& g);

/// Collection meets transversely: for each pair of disjoint nonempty
/// subcollections, the two intersections are disjoint or have additive codimension.
bool meets_transversely(std::span<const Locus> loci, const GeometryConfig& g);

/// Members of bs that are minimal among those containing ∩sub.
/// Throws std::invalid_argument when sub ⊄ bs.members or ∩sub is empty.
std::vector<Center> g_factors(const BuildingSet& bs, std::span<const Center> sub);

/// Nestedness straight from the definition: a flag W_1 ⊆ ... ⊆ W_k of
/// intersections with every element of sub a factor of some W_i.
///
/// The W_i are searched among intersections of subfamilies of sub. A witness
/// W_i can be shrunk to the intersection of the elements of sub it has as
/// factors without changing those factors, so this bound is assumed complete;
/// it is not proven here.
bool is_nested_flag_oracle(const BuildingSet& bs, std::span<const Center> sub);

/// Whether the first k members satisfy both building-set conditions.
bool is_building_set_prefix(const BuildingSet& bs, std::size_t k);

} // namespace wonderful
