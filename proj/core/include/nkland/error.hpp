#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace nkland {

class Error : public std::runtime_error
{
  public:
	using std::runtime_error::runtime_error;
};

// Parameters outside a generator's or operation's domain.
class InvalidParameters : public Error
{
  public:
	using Error::Error;
};

class ParseError : public Error
{
  public:
	ParseError(std::size_t line, const std::string &what)
	    : Error("line " + std::to_string(line) + ": " + what), line_(line)
	{}

	std::size_t line() const { return line_; }

  private:
	std::size_t line_;
};

// A component's variable set is larger than the brute-force cap.
class CapacityExceeded : public Error
{
  public:
	CapacityExceeded(std::size_t component, std::size_t size, std::size_t cap)
	    : Error("component " + std::to_string(component) + " has " +
	            std::to_string(size) + " variables (cap " + std::to_string(cap) +
	            ")"),
	      component_(component), size_(size)
	{}

	std::size_t component() const { return component_; }
	std::size_t size() const { return size_; }

  private:
	std::size_t component_;
	std::size_t size_;
};

} // namespace nkland
