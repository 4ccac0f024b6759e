#pragma once

#include <qlambert/constructors.hpp>
#include <qlambert/errors.hpp>
#include <qlambert/harness.hpp>
#include <qlambert/oracle.hpp>
#include <qlambert/series.hpp>
#include <qlambert/series_id.hpp>
