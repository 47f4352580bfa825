#pragma once

#include <potkit/kripke.hpp>

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string_view>
#include <vector>

namespace potkit {

enum class FrameClass
{
  preorder,
  directed_preorder,
  linear_preorder
};

std::string_view frame_class_name( FrameClass c );
std::optional<FrameClass> frame_class_from_name( std::string_view name );

bool in_class( const Frame& fr, FrameClass c );

inline constexpr std::size_t default_enumeration_cap = 6;
/// Canonical codes pack the adjacency matrix into 64 bits.
inline constexpr std::size_t max_canonical_worlds = 8;

/// Adjacency code: bit (i * n + j) is set iff i accesses j. Requires size() <= 8.
std::uint64_t adjacency_code( const Frame& fr );

/// Minimal adjacency code over all relabelings that order worlds by (out-degree, in-degree).
/// Equal for two frames iff they are isomorphic.
std::uint64_t canonical_code( const Frame& fr );

/// The relabeling of `fr` whose adjacency code is canonical_code(fr).
Frame canonical_form( const Frame& fr );

/// Every frame of the class with exactly `n` worlds, one per isomorphism type, in increasing
/// canonical-code order. Throws budget_exceeded when n > cap.
std::vector<Frame> enumerate_frames_exact( std::size_t n, FrameClass c, std::size_t cap = default_enumeration_cap );

/// Every frame of the class with 1..n worlds, ordered by size and then canonical code.
std::vector<Frame> enumerate_frames( std::size_t n, FrameClass c, std::size_t cap = default_enumeration_cap );

/// Streams the same sequence as enumerate_frames; stops early when `visit` returns false.
void for_each_frame( std::size_t n, FrameClass c, const std::function<bool( const Frame& )>& visit,
                     std::size_t cap = default_enumeration_cap );

} // namespace potkit
