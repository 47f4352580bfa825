#include <potkit/logics.hpp>

#include <potkit/error.hpp>

namespace potkit {

std::string theory_name( Theory t )
{
  switch ( t )
  {
  case Theory::S4:
    return "S4";
  case Theory::S4_2:
    return "S4.2";
  case Theory::S4_3:
    return "S4.3";
  }
  return "?";
}

std::optional<Theory> theory_from_name( std::string_view name )
{
  if ( name == "S4" )
    return Theory::S4;
  if ( name == "S4.2" || name == "S4_2" )
    return Theory::S4_2;
  if ( name == "S4.3" || name == "S4_3" )
    return Theory::S4_3;
  return std::nullopt;
}

FrameClass frame_class_of( Theory t )
{
  switch ( t )
  {
  case Theory::S4:
    return FrameClass::preorder;
  case Theory::S4_2:
    return FrameClass::directed_preorder;
  case Theory::S4_3:
    return FrameClass::linear_preorder;
  }
  return FrameClass::preorder;
}

DecisionOutcome decide( const Formula& f, Theory theory, std::size_t frame_bound, std::uint64_t valuation_budget,
                        std::size_t cap )
{
  DecisionOutcome outcome;
  outcome.theory = theory;
  outcome.bound_used = frame_bound;

  for_each_frame(
      frame_bound, frame_class_of( theory ),
      [&]( const Frame& fr ) {
        if ( auto cm = find_countermodel( fr, f, valuation_budget ) )
        {
          outcome.refutation = Refutation{ std::move( cm->model ), cm->world };
          return false;
        }
        return true;
      },
      cap );
  return outcome;
}

bool verify_refutation( const Formula& f, const Refutation& r ) { return !check( r.model, r.world, f ); }

} // namespace potkit
