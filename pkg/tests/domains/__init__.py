"""Domain tests package.""" 