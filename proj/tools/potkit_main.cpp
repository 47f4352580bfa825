#include <potkit/cli.hpp>

#include <iostream>
#include <string>
#include <vector>

int main( int argc, char** argv )
{
  std::ios::sync_with_stdio( false );
  return potkit::cli::run( std::vector<std::string>( argv + 1, argv + argc ), std::cin, std::cout, std::cerr );
}
